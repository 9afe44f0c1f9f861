#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcseq/mobius.hpp"

namespace lcseq::construct {

using gf::Fe;
using gf::Field;
using mobius::OrbitTable;
using mobius::RationalFn;

/// Parameters of one sequence family: the field, a primitive quadratic
/// x^2 + a x + b, and the sigma-orbit of the q+1 rational places.
struct FamilyParams {
    Fe a, b;
    OrbitTable orbit;
};

/// Validates that (a, b) is a primitive irreducible quadratic (error
/// NotPrimitive otherwise) and builds the orbit table.
FamilyParams make_params(const Field& F, Fe a, Fe b);

/// The shifts delta in F_q^* for which x^2 + a x + (b + delta) stays
/// irreducible, i.e. F_q^* minus { a^2/4 - b - s : s a square including 0 },
/// in ascending enc order. Size is exactly (q - 3) / 2.
std::vector<Fe> delta_set(const Field& F, Fe a, Fe b);

/// First monic irreducible quadratic g = u^2 + c u + d, scanned in ascending
/// (enc(c), enc(d)) order, such that with beta the class of u in F_q[u]/(g),
/// X := (beta^(q+1) + a beta + b) / (beta^q - beta) satisfies
/// X^2 + a X + (b + delta) == 0. Such a g is a degree-2 point of the curve
/// x = (u^(q+1) + a u + b)/(u^q - u) lying over x^2 + a x + (b + delta).
/// Throws NoLift when no candidate passes (indicates an upstream bug).
std::pair<Fe, Fe> lift_place(const Field& F, Fe a, Fe b, Fe delta);

/// All (c, d) passing the lift relation, ascending (for verification).
std::vector<std::pair<Fe, Fe>> valid_lifts(const Field& F, Fe a, Fe b, Fe delta);

struct Representative {
    enum class Kind { R1, R2 };
    Kind kind;
    int index;       // 1-based family position
    RationalFn fn;   // monic numerator over u^2 + a u + b
    Fe witness;      // delta_i for R1, alpha_j for R2
    int orbit_j = -1; // R2 only
};

/// R1: z_i = (u^2 + c_i u + d_i)/(u^2 + a u + b) for the i-th delta,
/// i = 1..(q-3)/2.
std::vector<Representative> build_r1(const Field& F, const FamilyParams& params);

/// R2: w_j = (u - alpha_j)/(u^2 + a u + b) for j = 2..(q+1)/2, family
/// positions (q-1)/2..(q-2).
std::vector<Representative> build_r2(const Field& F, const FamilyParams& params);

/// R1 block followed by the R2 block; exactly q - 2 entries.
std::vector<Representative> assemble_family(const Field& F, const FamilyParams& params);

/// Value of num/den at the place indexed by j: substitution at alpha_j for
/// j != 1, and the degree comparison at the infinite place for j == 1
/// (0 when deg num < deg den, ratio of leading coefficients when equal).
/// nullopt signals a pole.
std::optional<Fe> eval_place(const Field& F, const RationalFn& z, uint64_t j,
                             const OrbitTable& orbit);

/// Same, for family representatives whose denominator is irreducible, so a
/// pole cannot occur; throws PoleAtPlace if it somehow does.
Fe evaluate_at_place(const Field& F, const RationalFn& z, uint64_t j, const OrbitTable& orbit);

/// One +-1 sequence of length q + 1, with the packed form used by the
/// correlation fast path (bit k of word w = entry 64w + k; bit 1 = entry -1).
struct BinSeq {
    std::vector<int8_t> values;
    std::vector<uint64_t> packed;

    int n() const { return static_cast<int>(values.size()); }
    static BinSeq from_values(std::vector<int8_t> values);
};

/// s_{i,j} = eta(z_i at place j) for j = 0..q, in family order.
std::vector<BinSeq> generate_sequences(const Field& F, const FamilyParams& params,
                                       const std::vector<Representative>& reps);

/// Everything the serializers and the CLI need, in one place.
struct Family {
    uint64_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> field_modulus;
    Fe a, b;
    std::vector<std::optional<Fe>> alphas;
    std::vector<Representative> reps;
    std::vector<BinSeq> seqs;
    std::vector<Fe> deltas;                  // provenance
    std::vector<std::pair<Fe, Fe>> lifts;    // provenance, parallel to deltas

    size_t size() const { return seqs.size(); }
    int length() const { return seqs.empty() ? 0 : seqs.front().n(); }
};

/// Full pipeline: (a, b) defaults to the first primitive quadratic.
Family generate(const Field& F, std::optional<std::pair<Fe, Fe>> ab = std::nullopt);

} // namespace lcseq::construct
