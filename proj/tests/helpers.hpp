#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcseq/construct.hpp"
#include "lcseq/poly.hpp"

namespace testutil {

/// Deterministic generator for property-style tests (splitmix64).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }

  private:
    uint64_t state_;
};

inline lcseq::gf::Fe random_elem(Rng& rng, const lcseq::gf::Field& F) {
    return lcseq::gf::Fe{static_cast<uint32_t>(rng.below(F.q()))};
}

inline lcseq::poly::Poly random_poly(Rng& rng, const lcseq::gf::Field& F, int max_deg,
                                     bool nonzero = false) {
    std::vector<lcseq::gf::Fe> c(rng.below(static_cast<uint64_t>(max_deg) + 2));
    for (auto& ci : c) ci = random_elem(rng, F);
    auto p = lcseq::poly::Poly::from_coeffs(std::move(c));
    if (nonzero && p.is_zero()) p = lcseq::poly::Poly::constant(F.one());
    return p;
}

/// Euler-criterion oracle for the quadratic character, independent of the
/// log-table implementation: slow square-and-multiply on the exponent
/// (q - 1) / 2.
inline int eta_oracle(const lcseq::gf::Field& F, lcseq::gf::Fe a) {
    if (a.v == 0) return 1;
    lcseq::gf::Fe acc = F.one(), base = a;
    uint64_t e = (F.q() - 1) / 2;
    while (e) {
        if (e & 1) acc = F.mul(acc, base);
        base = F.mul(base, base);
        e >>= 1;
    }
    return acc == F.one() ? 1 : -1;
}

/// Direct power-enumeration order oracle.
inline uint64_t order_oracle(const lcseq::gf::Field& F, lcseq::gf::Fe a) {
    lcseq::gf::Fe acc = a;
    uint64_t k = 1;
    while (acc != F.one()) {
        acc = F.mul(acc, a);
        ++k;
    }
    return k;
}

/// Does b equal a cyclically shifted by some s (b_k == a_{(k+s) mod N})?
inline std::optional<int> find_cyclic_shift(const std::vector<int8_t>& a,
                                            const std::vector<int8_t>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return std::nullopt;
    for (int s = 0; s < n; ++s) {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) ok = b[k] == a[(k + s) % n];
        if (ok) return s;
    }
    return std::nullopt;
}

inline std::vector<int8_t> negate_seq(std::vector<int8_t> v) {
    for (auto& e : v) e = static_cast<int8_t>(-e);
    return v;
}

} // namespace testutil
