#include "lcseq/verify.hpp"

#include <algorithm>

namespace lcseq::verify {

using poly::Poly;

bool is_const_times_square(const Field& F, const Poly& num, const Poly& den) {
    if (num.is_zero() || den.is_zero())
        fail(Errc::DivisionByZero, "square-class test needs nonzero num and den");
    const Poly g = poly::gcd(F, num, den);
    const Poly nr = poly::divrem(F, num, g).first;
    const Poly dr = poly::divrem(F, den, g).first;
    if ((nr.deg() - dr.deg()) % 2 != 0) return false; // odd valuation at infinity
    const Poly prod = poly::mul(F, nr, dr);
    return poly::squarefree_part(F, prod).deg() == 0;
}

namespace {

// z composed with sigma^{-t}, i.e. pulled back along maps[(q+1-t) mod (q+1)].
RationalFn sigma_inverse_t(const Field& F, const OrbitTable& orbit, const RationalFn& z,
                           int64_t t) {
    const uint64_t order = orbit.maps.size(); // q + 1
    const uint64_t idx = (order - static_cast<uint64_t>(t) % order) % order;
    return mobius::pullback(F, orbit.maps[idx], z);
}

} // namespace

std::vector<SquareClassVerdict> check_class_distinctness(const Field& F,
                                                         const std::vector<Representative>& reps,
                                                         Fe a, Fe b, const OrbitTable& orbit) {
    (void)a;
    (void)b;
    std::vector<SquareClassVerdict> violations;
    const int64_t delays = static_cast<int64_t>(F.q()) + 1;
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = 0; j < reps.size(); ++j) {
            for (int64_t t = 0; t < delays; ++t) {
                if (i == j && t == 0) continue;
                const RationalFn pb = sigma_inverse_t(F, orbit, reps[j].fn, t);
                const Poly num = poly::mul(F, reps[i].fn.num, pb.num);
                const Poly den = poly::mul(F, reps[i].fn.den, pb.den);
                if (is_const_times_square(F, num, den)) {
                    SquareClassVerdict v;
                    v.i = static_cast<int>(i) + 1;
                    v.j = static_cast<int>(j) + 1;
                    v.t = t;
                    v.is_const_square = true;
                    v.parity_witness = "all multiplicities even";
                    violations.push_back(std::move(v));
                }
            }
        }
    }
    return violations;
}

namespace {

// Multiplicity of the root alpha in f, and f with those factors removed.
std::pair<int, Poly> strip_root(const Field& F, Poly f, Fe alpha) {
    int mult = 0;
    const Poly lin = poly::linear(F, alpha);
    while (!f.is_zero() && poly::eval(F, f, alpha).v == 0) {
        f = poly::divrem(F, f, lin).first;
        ++mult;
    }
    return {mult, std::move(f)};
}

} // namespace

KummerCounts count_kummer_points(const Field& F, const RationalFn& f, const OrbitTable& orbit) {
    if (is_const_times_square(F, f.num, f.den))
        fail(Errc::PrecondViolated, "f is a constant times a square");
    const Poly g = poly::gcd(F, f.num, f.den);
    const Poly nr = poly::divrem(F, f.num, g).first;
    const Poly dr = poly::divrem(F, f.den, g).first;

    KummerCounts counts;
    for (size_t j = 0; j < orbit.alphas.size(); ++j) {
        int64_t val; // valuation of f at the place
        Fe unit;     // f with the uniformizer power stripped, evaluated there
        if (orbit.alphas[j].has_value()) {
            const Fe alpha = *orbit.alphas[j];
            auto [mn, rest_n] = strip_root(F, nr, alpha);
            auto [md, rest_d] = strip_root(F, dr, alpha);
            val = mn - md;
            unit = F.mul(poly::eval(F, rest_n, alpha), F.inv(poly::eval(F, rest_d, alpha)));
        } else {
            val = dr.deg() - nr.deg();
            unit = F.mul(nr.lead(), F.inv(dr.lead()));
        }
        if (val > 0) ++counts.z_count;
        if (val % 2 != 0) {
            counts.n_points += 1; // ramified
        } else if (val == 0) {
            if (F.eta(unit) == 1) {
                counts.n_points += 2;
                ++counts.n_plus;
            } else {
                ++counts.n_minus;
            }
        } else {
            counts.n_points += F.eta(unit) == 1 ? 2 : 0;
        }
    }
    if (counts.z_count > 4)
        fail(Errc::PrecondViolated,
             "more than 4 rational zeros; f is not of the form z_i * sigma^{-t}(z_j)");
    return counts;
}

bool check_orbit(const Field& F, Fe a, Fe b) {
    try {
        const mobius::Mobius sigma = mobius::sigma_from(F, a, b);
        if (mobius::projective_order(F, sigma) != F.q() + 1) return false;
        const OrbitTable t = mobius::orbit(F, a, b); // validates bijectivity internally
        for (size_t j = 0; j + 1 < t.maps.size(); ++j) {
            if (mobius::compose(F, t.maps[j], t.maps[1]) != t.maps[j + 1]) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool cross_check_correlation(const std::vector<BinSeq>& seqs, uint64_t q) {
    const auto packed = correlate::family_correlation(seqs, q, correlate::Path::Packed);
    const auto naive = correlate::family_correlation(seqs, q, correlate::Path::Naive);
    return packed == naive;
}

} // namespace lcseq::verify
