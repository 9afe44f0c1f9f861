#pragma once

#include <string>
#include <vector>

#include "lcseq/construct.hpp"
#include "lcseq/correlate.hpp"

namespace lcseq::verify {

using construct::BinSeq;
using construct::FamilyParams;
using construct::Representative;
using gf::Fe;
using gf::Field;
using mobius::OrbitTable;
using mobius::RationalFn;

/// One failed (or diagnosed) square-class comparison.
struct SquareClassVerdict {
    int i = 0, j = 0; // 1-based family indices
    int64_t t = 0;
    bool is_const_square = false;
    std::string parity_witness; // odd-multiplicity factor or infinity-parity flag
};

/// Membership test for the constant-times-square class: after cancelling
/// gcd(num, den), every finite place must have even multiplicity
/// (squarefree_part(num * den) == 1) and the degree difference must be even
/// (even valuation at infinity). The constant in F_q is unconstrained.
bool is_const_times_square(const Field& F, const poly::Poly& num, const poly::Poly& den);

/// Sweeps z_i * sigma^{-t}(z_j) over all family pairs and delays, excluding
/// only (i == j, t == 0), and returns the violations (expected empty: the
/// representatives lie in pairwise distinct square classes).
std::vector<SquareClassVerdict> check_class_distinctness(const Field& F,
                                                         const std::vector<Representative>& reps,
                                                         Fe a, Fe b, const OrbitTable& orbit);

/// Exact rational-point census of the double cover y^2 = f over the q+1
/// rational places. Places where f has odd valuation ramify and contribute
/// one point; even valuation contributes two points or none according to
/// eta of the unit part. z_count is the number of places where f vanishes
/// (at most 4 for any f = z_i sigma^{-t}(z_j), enforced); n_plus/n_minus
/// count the nonzero finite values by character sign.
struct KummerCounts {
    int64_t n_points = 0;
    int z_count = 0;
    int64_t n_plus = 0;
    int64_t n_minus = 0;
};

/// Throws PrecondViolated when f is a constant times a square (the cover
/// degenerates to a constant-field extension and the census is meaningless).
KummerCounts count_kummer_points(const Field& F, const RationalFn& f, const OrbitTable& orbit);

/// Recomputes the orbit and checks: projective order of sigma is q + 1, the
/// orbit points are a bijection onto F_q plus infinity, and each maps[j+1]
/// equals maps[j] composed with maps[1]. Returns false instead of throwing.
bool check_orbit(const Field& F, Fe a, Fe b);

/// Packed and naive correlation reports must agree field by field.
bool cross_check_correlation(const std::vector<BinSeq>& seqs, uint64_t q);

} // namespace lcseq::verify
