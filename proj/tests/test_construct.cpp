#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lcseq/construct.hpp"
#include "lcseq/correlate.hpp"

using namespace lcseq;
using construct::Representative;
using gf::Fe;
using gf::Field;
using testutil::Rng;

namespace {

// Independent lift oracle. Models F_{q^2} as F_q[y]/(y^2 + A y + B) for the
// first primitive quadratic (A, B), finds the roots of a candidate
// g = u^2 + c u + d there by exhaustive scan, computes
// x(beta) = (beta^{q+1} + a beta + b) / (beta^q - beta) directly in F_{q^2},
// and checks that it is a root of X^2 + a X + (b + delta). No powmod or
// modular inverse in F_q[u]/(g) is involved.
struct QuadExt {
    const Field& F;
    Fe A, B; // y^2 = -A y - B
    using E = std::pair<Fe, Fe>; // c0 + c1 y

    E add(E x, E y) const { return {F.add(x.first, y.first), F.add(x.second, y.second)}; }
    E mul(E x, E y) const {
        const Fe t2 = F.mul(x.second, y.second);
        const Fe t1 = F.add(F.mul(x.first, y.second), F.mul(x.second, y.first));
        const Fe t0 = F.mul(x.first, y.first);
        return {F.sub(t0, F.mul(t2, B)), F.sub(t1, F.mul(t2, A))};
    }
    E pow(E x, uint64_t e) const {
        E acc{F.one(), F.zero()};
        while (e) {
            if (e & 1) acc = mul(acc, x);
            x = mul(x, x);
            e >>= 1;
        }
        return acc;
    }
    E inv(E x) const {
        // x * conj(x) = norm in F_q, conj(c0 + c1 y) = (c0 - c1 A) - c1 y
        const E conj{F.sub(x.first, F.mul(x.second, A)), F.neg(x.second)};
        const E n = mul(x, conj);
        REQUIRE(n.second.v == 0);
        const Fe ninv = F.inv(n.first);
        return {F.mul(conj.first, ninv), F.mul(conj.second, ninv)};
    }
};

bool lift_oracle(const Field& F, const QuadExt& K, Fe a, Fe b, Fe delta, Fe c, Fe d) {
    // roots of u^2 + c u + d in F_{q^2}, by scan
    std::vector<QuadExt::E> roots;
    for (uint64_t e0 = 0; e0 < F.q() && roots.size() < 2; ++e0) {
        for (uint64_t e1 = 0; e1 < F.q() && roots.size() < 2; ++e1) {
            const QuadExt::E beta{F.elem(e0), F.elem(e1)};
            const QuadExt::E val =
                K.add(K.add(K.mul(beta, beta), K.mul({c, F.zero()}, beta)), {d, F.zero()});
            if (val.first.v == 0 && val.second.v == 0) roots.push_back(beta);
        }
    }
    if (roots.empty()) return false;
    const auto beta = roots.front();
    if (beta.second.v == 0) return false; // rational root: not a degree-2 place
    const auto bq = K.pow(beta, F.q());
    const auto denom = K.add(bq, {F.neg(beta.first), F.neg(beta.second)});
    if (denom.first.v == 0 && denom.second.v == 0) return false;
    const auto numer =
        K.add(K.add(K.mul(bq, beta), K.mul({a, F.zero()}, beta)), {b, F.zero()});
    const auto X = K.mul(numer, K.inv(denom));
    const auto rel = K.add(K.add(K.mul(X, X), K.mul({a, F.zero()}, X)),
                           {F.add(b, delta), F.zero()});
    return rel.first.v == 0 && rel.second.v == 0;
}

} // namespace

TEST_CASE("delta set: examples and size invariant") {
    const Field f7 = Field::make(7, 1);
    const auto d7 = construct::delta_set(f7, f7.elem(1), f7.elem(3));
    REQUIRE(d7.size() == 2);
    CHECK(d7[0] == f7.elem(1));
    CHECK(d7[1] == f7.elem(3));

    const Field f25 = Field::make(5, 2);
    const auto [a25, b25] = poly::first_primitive_quadratic(f25);
    CHECK(construct::delta_set(f25, a25, b25).size() == 11);

    const Field f3 = Field::make(3, 1);
    const auto [a3, b3] = poly::first_primitive_quadratic(f3);
    CHECK(construct::delta_set(f3, a3, b3).empty());

    // exhaustive: every delta keeps x^2 + a x + (b + delta) irreducible, and
    // the complement does not; size is (q-3)/2 for every primitive pair
    for (auto [p, m] : {std::pair<uint64_t, uint32_t>{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1},
                        {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}}) {
        const Field F = Field::make(p, m);
        for (uint64_t ea = 0; ea < F.q(); ++ea) {
            for (uint64_t eb = 0; eb < F.q(); ++eb) {
                const Fe a = F.elem(ea), b = F.elem(eb);
                if (!poly::is_primitive_quadratic(F, a, b)) continue;
                const auto ds = construct::delta_set(F, a, b);
                CHECK(ds.size() == (F.q() - 3) / 2);
                std::set<uint32_t> in_set;
                for (const auto& d : ds) in_set.insert(d.v);
                for (uint64_t ed = 1; ed < F.q(); ++ed) {
                    const bool irred =
                        poly::is_irreducible_quadratic(F, a, F.add(b, F.elem(ed)));
                    CHECK(irred == (in_set.count(static_cast<uint32_t>(ed)) > 0));
                }
            }
        }
    }
}

TEST_CASE("lift_place: first-match choice, oracle agreement, split count") {
    const Field F = Field::make(7, 1);
    const Fe a = F.elem(1), b = F.elem(3);
    const auto [A, B] = poly::first_primitive_quadratic(F);
    const QuadExt K{F, A, B};

    // canonical lift for delta = 1, frozen after oracle verification
    const auto [c1, d1] = construct::lift_place(F, a, b, F.one());
    CHECK(c1 == F.elem(1));
    CHECK(d1 == F.elem(4));
    CHECK(lift_oracle(F, K, a, b, F.one(), c1, d1));

    for (const Fe delta : construct::delta_set(F, a, b)) {
        const auto lifts = construct::valid_lifts(F, a, b, delta);
        // complete splitting: exactly q + 1 degree-2 places lie over each
        // shifted quadratic place
        CHECK(lifts.size() == F.q() + 1);
        // the canonical lift is the lexicographic minimum
        CHECK(construct::lift_place(F, a, b, delta) == lifts.front());
        // every reported lift passes the independent oracle; every
        // irreducible non-lift fails it
        std::set<std::pair<uint32_t, uint32_t>> valid;
        for (const auto& [c, d] : lifts) valid.insert({c.v, d.v});
        for (uint64_t ec = 0; ec < F.q(); ++ec) {
            for (uint64_t ed = 0; ed < F.q(); ++ed) {
                const Fe c = F.elem(ec), d = F.elem(ed);
                if (!poly::is_irreducible_quadratic(F, c, d)) continue;
                CHECK(lift_oracle(F, K, a, b, delta, c, d) ==
                      (valid.count({c.v, d.v}) > 0));
            }
        }
    }

    // split count across every q <= 13 (the full oracle sweep is q = 7 only)
    for (auto [pp, mm] :
         {std::pair<uint64_t, uint32_t>{5, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        const Field Fq = Field::make(pp, mm);
        const auto [aq, bq] = poly::first_primitive_quadratic(Fq);
        for (const Fe delta : construct::delta_set(Fq, aq, bq))
            CHECK(construct::valid_lifts(Fq, aq, bq, delta).size() == Fq.q() + 1);
    }
}

TEST_CASE("representatives: counts, numerators, assembly") {
    const Field f7 = Field::make(7, 1);
    const auto params7 = construct::make_params(f7, f7.elem(1), f7.elem(3));
    const auto r1 = construct::build_r1(f7, params7);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].witness == f7.elem(1));
    CHECK(r1[1].witness == f7.elem(3));
    for (const auto& rep : r1) {
        CHECK(rep.kind == Representative::Kind::R1);
        CHECK(rep.fn.num.deg() == 2);
        CHECK(poly::is_irreducible_quadratic(f7, rep.fn.num.coeff(1), rep.fn.num.coeff(0)));
    }

    const auto r2 = construct::build_r2(f7, params7);
    REQUIRE(r2.size() == 3);
    // alphas at j = 2, 3, 4 are 6, 2, 1: numerators u-6, u-2, u-1
    CHECK(r2[0].fn.num == poly::linear(f7, f7.elem(6)));
    CHECK(r2[1].fn.num == poly::linear(f7, f7.elem(2)));
    CHECK(r2[2].fn.num == poly::linear(f7, f7.elem(1)));

    const auto fam7 = construct::assemble_family(f7, params7);
    CHECK(fam7.size() == 5);

    const Field f25 = Field::make(5, 2);
    const auto [a25, b25] = poly::first_primitive_quadratic(f25);
    const auto params25 = construct::make_params(f25, a25, b25);
    CHECK(construct::build_r1(f25, params25).size() == 11);
    CHECK(construct::build_r2(f25, params25).size() == 12);
    CHECK(construct::assemble_family(f25, params25).size() == 23);

    const Field f3 = Field::make(3, 1);
    const auto [a3, b3] = poly::first_primitive_quadratic(f3);
    const auto params3 = construct::make_params(f3, a3, b3);
    CHECK(construct::assemble_family(f3, params3).size() == 1);

    // w_2 has numerator u + a (alpha_2 = -a), for several parameter pairs
    for (auto [p, m] : {std::pair<uint64_t, uint32_t>{7, 1}, {11, 1}, {5, 2}}) {
        const Field F = Field::make(p, m);
        const auto [a, b] = poly::first_primitive_quadratic(F);
        const auto params = construct::make_params(F, a, b);
        REQUIRE(params.orbit.alphas[2].has_value());
        CHECK(*params.orbit.alphas[2] == F.neg(a));
    }

    CHECK_THROWS_AS(construct::make_params(f7, f7.zero(), f7.elem(2)), Error);
}

TEST_CASE("evaluate_at_place") {
    const Field F = Field::make(7, 1);
    const auto params = construct::make_params(F, F.elem(1), F.elem(3));
    const auto fam = construct::assemble_family(F, params);

    // R1 at the infinite place evaluates to 1, R2 to 0
    for (const auto& rep : fam) {
        const Fe v = construct::evaluate_at_place(F, rep.fn, 1, params.orbit);
        CHECK(v == (rep.kind == Representative::Kind::R1 ? F.one() : F.zero()));
    }
    // w_2 at j = 0 (alpha_0 = 0) evaluates to a/b = 1/3 = 5
    const auto& w2 = fam[2];
    REQUIRE(w2.kind == Representative::Kind::R2);
    CHECK(construct::evaluate_at_place(F, w2.fn, 0, params.orbit) == F.elem(5));
}

TEST_CASE("generated sequences: shape and recounts") {
    for (auto [p, m] : {std::pair<uint64_t, uint32_t>{7, 1}, {5, 2}, {3, 3}}) {
        const Field F = Field::make(p, m);
        const construct::Family fam = construct::generate(F);
        const uint64_t q = F.q();
        CHECK(fam.size() == q - 2);
        for (const auto& s : fam.seqs) {
            CHECK(s.values.size() == q + 1);
            CHECK(s.values[1] == 1);
            for (const int8_t v : s.values) CHECK((v == 1 || v == -1));
        }
        // minus-count recount for R1 rows by direct evaluation
        const auto params = construct::make_params(F, fam.a, fam.b);
        for (size_t i = 0; i < fam.reps.size(); ++i) {
            if (fam.reps[i].kind != Representative::Kind::R1) continue;
            int direct = 0;
            for (uint64_t j = 0; j <= q; ++j) {
                if (j == 1) continue;
                if (F.eta(construct::evaluate_at_place(F, fam.reps[i].fn, j, params.orbit)) ==
                    -1)
                    ++direct;
            }
            CHECK(direct == std::count(fam.seqs[i].values.begin(), fam.seqs[i].values.end(),
                                       int8_t{-1}));
        }
    }
}

TEST_CASE("alternate lifts give the same sequence up to shift and sign") {
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const Field F = Field::make(p, 1);
        const auto [a, b] = poly::first_primitive_quadratic(F);
        const auto params = construct::make_params(F, a, b);
        const auto den = poly::quadratic(F, a, b);
        for (const Fe delta : construct::delta_set(F, a, b)) {
            const auto lifts = construct::valid_lifts(F, a, b, delta);
            std::vector<std::vector<int8_t>> seqs;
            for (const auto& [c, d] : lifts) {
                const mobius::RationalFn fn{poly::quadratic(F, c, d), den};
                std::vector<int8_t> v(F.q() + 1);
                for (uint64_t j = 0; j <= F.q(); ++j)
                    v[j] = static_cast<int8_t>(
                        F.eta(construct::evaluate_at_place(F, fn, j, params.orbit)));
                seqs.push_back(std::move(v));
            }
            for (size_t k = 1; k < seqs.size(); ++k) {
                const bool plain = testutil::find_cyclic_shift(seqs[0], seqs[k]).has_value();
                const bool negated =
                    testutil::find_cyclic_shift(seqs[0], testutil::negate_seq(seqs[k]))
                        .has_value();
                CHECK((plain || negated));
            }
        }
    }
}

TEST_CASE("sequences are pairwise distinct, no two are cyclic shifts") {
    for (auto [p, m] : {std::pair<uint64_t, uint32_t>{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1},
                        {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}}) {
        const Field F = Field::make(p, m);
        const construct::Family fam = construct::generate(F);
        for (size_t i = 0; i < fam.size(); ++i) {
            for (size_t j = i + 1; j < fam.size(); ++j) {
                CHECK_FALSE(
                    testutil::find_cyclic_shift(fam.seqs[i].values, fam.seqs[j].values)
                        .has_value());
            }
        }
    }
}

TEST_CASE("packed form stays consistent with values") {
    Rng rng(0xbead);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(200));
        std::vector<int8_t> v(n);
        for (auto& e : v) e = rng.below(2) ? int8_t{1} : int8_t{-1};
        const auto s = construct::BinSeq::from_values(v);
        for (int i = 0; i < n; ++i)
            CHECK(((s.packed[i / 64] >> (i % 64)) & 1) == (v[i] == -1 ? 1u : 0u));
    }
}
