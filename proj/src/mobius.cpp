#include "lcseq/mobius.hpp"

#include <algorithm>

namespace lcseq::mobius {

Mobius identity(const Field& F) { return Mobius{F.one(), F.zero(), F.zero(), F.one()}; }

Mobius sigma_from(const Field& F, Fe a, Fe b) {
    if (b.v == 0) fail(Errc::SingularMap, "sigma requires b != 0");
    return Mobius{F.zero(), F.neg(b), F.one(), a};
}

Fe det(const Field& F, const Mobius& m) {
    return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Mobius compose(const Field& F, const Mobius& l, const Mobius& r) {
    return Mobius{
        F.add(F.mul(l.a, r.a), F.mul(l.b, r.c)),
        F.add(F.mul(l.a, r.b), F.mul(l.b, r.d)),
        F.add(F.mul(l.c, r.a), F.mul(l.d, r.c)),
        F.add(F.mul(l.c, r.b), F.mul(l.d, r.d)),
    };
}

Mobius inverse(const Field& F, const Mobius& m) {
    if (det(F, m).v == 0) fail(Errc::SingularMap, "singular matrix has no inverse");
    return Mobius{m.d, F.neg(m.b), F.neg(m.c), m.a};
}

bool is_scalar(const Field& F, const Mobius& m) {
    (void)F;
    return m.b.v == 0 && m.c.v == 0 && m.a == m.d && m.a.v != 0;
}

uint64_t projective_order(const Field& F, const Mobius& m) {
    if (det(F, m).v == 0) fail(Errc::SingularMap, "projective order of singular matrix");
    Mobius acc = m;
    uint64_t k = 1;
    const uint64_t limit = (F.q() + 1) * (F.q() + 1);
    while (!is_scalar(F, acc)) {
        acc = compose(F, acc, m);
        ++k;
        if (k > limit) fail(Errc::Internal, "projective order exceeded bound");
    }
    return k;
}

OrbitTable orbit(const Field& F, Fe a, Fe b) {
    sigma_from(F, a, b); // validates b != 0
    const uint64_t q = F.q();
    OrbitTable t;
    t.maps.reserve(q + 1);
    t.alphas.reserve(q + 1);

    Mobius cur = identity(F);
    const Fe nb = F.neg(b);
    for (uint64_t j = 0; j <= q; ++j) {
        if (j > 0) {
            cur = Mobius{
                cur.b,
                F.add(F.mul(nb, cur.a), F.mul(a, cur.b)),
                cur.d,
                F.add(F.mul(nb, cur.c), F.mul(a, cur.d)),
            };
        }
        t.maps.push_back(cur);
        if (j == 1) {
            if (cur.a.v != 0) fail(Errc::Internal, "sigma^1 must have a_1 == 0");
            t.alphas.push_back(std::nullopt);
        } else {
            if (cur.a.v == 0)
                fail(Errc::OrbitDegenerate,
                     "a_j vanished at j = " + std::to_string(j) + "; orbit revisits infinity");
            t.alphas.push_back(F.neg(F.mul(cur.b, F.inv(cur.a))));
        }
    }

    // pairwise distinct and covering F_q + infinity
    std::vector<bool> seen(q, false);
    for (uint64_t j = 0; j <= q; ++j) {
        if (!t.alphas[j].has_value()) continue;
        const uint32_t v = t.alphas[j]->v;
        if (seen[v])
            fail(Errc::OrbitDegenerate, "orbit points collide; (a, b) does not have order q+1");
        seen[v] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        fail(Errc::OrbitDegenerate, "orbit does not cover F_q");
    return t;
}

RationalFn pullback(const Field& F, const Mobius& m, const RationalFn& z) {
    if (z.den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    const int L = std::max(z.num.deg(), z.den.deg());
    if (L <= 0) return z; // constants are fixed

    const poly::Poly top = poly::Poly::from_coeffs({m.b, m.a});    // a u + b
    const poly::Poly bot = poly::Poly::from_coeffs({m.d, m.c});    // c u + d

    std::vector<poly::Poly> top_pow(L + 1), bot_pow(L + 1);
    top_pow[0] = poly::Poly::constant(F.one());
    bot_pow[0] = poly::Poly::constant(F.one());
    for (int i = 1; i <= L; ++i) {
        top_pow[i] = poly::mul(F, top_pow[i - 1], top);
        bot_pow[i] = poly::mul(F, bot_pow[i - 1], bot);
    }

    auto substitute = [&](const poly::Poly& f) {
        poly::Poly out = poly::Poly::zero();
        for (int i = 0; i <= L; ++i) {
            Fe ci = f.coeff(static_cast<size_t>(i));
            if (ci.v == 0) continue;
            out = poly::add(F, out, poly::scale(F, poly::mul(F, top_pow[i], bot_pow[L - i]), ci));
        }
        return out;
    };

    return RationalFn{substitute(z.num), substitute(z.den)};
}

} // namespace lcseq::mobius
