#include "lcseq/poly.hpp"

#include <algorithm>

#include "lcseq/nt.hpp"

namespace lcseq::poly {

Poly Poly::from_coeffs(std::vector<Fe> coeffs) {
    while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Poly poly_x(const Field& F) { return Poly{{F.zero(), F.one()}}; }

Poly quadratic(const Field& F, Fe a, Fe b) {
    return Poly::from_coeffs({b, a, F.one()});
}

Poly linear(const Field& F, Fe alpha) { return Poly::from_coeffs({F.neg(alpha), F.one()}); }

Poly add(const Field& F, const Poly& f, const Poly& g) {
    std::vector<Fe> out(std::max(f.c.size(), g.c.size()), F.zero());
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.add(f.coeff(i), g.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

Poly sub(const Field& F, const Poly& f, const Poly& g) {
    std::vector<Fe> out(std::max(f.c.size(), g.c.size()), F.zero());
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.sub(f.coeff(i), g.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

Poly mul(const Field& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero();
    std::vector<Fe> out(f.c.size() + g.c.size() - 1, F.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].v == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(f.c[i], g.c[j]));
    }
    return Poly::from_coeffs(std::move(out));
}

Poly scale(const Field& F, const Poly& f, Fe s) {
    if (s.v == 0) return Poly::zero();
    std::vector<Fe> out = f.c;
    for (auto& ci : out) ci = F.mul(ci, s);
    return Poly{std::move(out)};
}

Poly monic(const Field& F, const Poly& f) {
    if (f.is_zero()) return f;
    return scale(F, f, F.inv(f.lead()));
}

std::pair<Poly, Poly> divrem(const Field& F, const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (f.deg() < g.deg()) return {Poly::zero(), f};
    const Fe li = F.inv(g.lead());
    std::vector<Fe> rem = f.c;
    std::vector<Fe> quot(f.deg() - g.deg() + 1, F.zero());
    for (int d = f.deg(); d >= g.deg(); --d) {
        Fe c = F.mul(rem[d], li);
        if (c.v == 0) continue;
        quot[d - g.deg()] = c;
        for (int i = 0; i <= g.deg(); ++i)
            rem[d - g.deg() + i] = F.sub(rem[d - g.deg() + i], F.mul(c, g.c[i]));
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly gcd(const Field& F, Poly f, Poly g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::DivisionByZero, "gcd(0, 0) undefined");
    while (!g.is_zero()) {
        Poly r = divrem(F, f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(F, f);
}

Fe eval(const Field& F, const Poly& f, Fe x) {
    Fe acc = F.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

Poly powmod(const Field& F, Poly f, uint64_t e, const Poly& g) {
    if (g.deg() < 1) fail(Errc::DivisionByZero, "powmod modulus must be nonconstant");
    Poly result = Poly::constant(F.one());
    f = divrem(F, f, g).second;
    while (e > 0) {
        if (e & 1) result = divrem(F, mul(F, result, f), g).second;
        f = divrem(F, mul(F, f, f), g).second;
        e >>= 1;
    }
    return result;
}

Poly derivative(const Field& F, const Poly& f) {
    if (f.deg() < 1) return Poly::zero();
    std::vector<Fe> out(f.c.size() - 1, F.zero());
    for (size_t i = 1; i < f.c.size(); ++i)
        out[i - 1] = F.mul(F.from_int(static_cast<int64_t>(i)), f.c[i]);
    return Poly::from_coeffs(std::move(out));
}

Poly modular_inverse(const Field& F, const Poly& f, const Poly& g) {
    // extended Euclid on (g, f mod g)
    Poly r0 = g, r1 = divrem(F, f, g).second;
    Poly s0 = Poly::zero(), s1 = Poly::constant(F.one());
    if (r1.is_zero()) fail(Errc::DivisionByZero, "element not invertible modulo g");
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(F, r0, r1);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.deg() != 0) fail(Errc::DivisionByZero, "element not invertible modulo g");
    return divrem(F, scale(F, s0, F.inv(r0.lead())), g).second;
}

bool is_irreducible_quadratic(const Field& F, Fe a, Fe b) {
    Fe disc = F.sub(F.mul(a, a), F.mul(F.from_int(4), b));
    return F.eta(disc) == -1;
}

namespace {

bool primitive_with_factors(const Field& F, Fe a, Fe b,
                            const std::vector<std::pair<uint64_t, uint32_t>>& factors,
                            uint64_t order) {
    if (!is_irreducible_quadratic(F, a, b)) return false;
    const Poly px = quadratic(F, a, b);
    const Poly x = poly_x(F);
    const Poly one = Poly::constant(F.one());
    for (const auto& [r, e] : factors) {
        (void)e;
        if (powmod(F, x, order / r, px) == one) return false;
    }
    return true;
}

} // namespace

bool is_primitive_quadratic(const Field& F, Fe a, Fe b) {
    const uint64_t order = F.q() * F.q() - 1;
    return primitive_with_factors(F, a, b, nt::factorize(order), order);
}

std::pair<Fe, Fe> first_primitive_quadratic(const Field& F) {
    const uint64_t order = F.q() * F.q() - 1;
    const auto factors = nt::factorize(order);
    for (uint64_t ea = 0; ea < F.q(); ++ea) {
        for (uint64_t eb = 0; eb < F.q(); ++eb) {
            Fe a{static_cast<uint32_t>(ea)}, b{static_cast<uint32_t>(eb)};
            if (primitive_with_factors(F, a, b, factors, order)) return {a, b};
        }
    }
    fail(Errc::NotFound, "no primitive quadratic found"); // unreachable for q >= 3
}

namespace {

// Replace f(u) = g(u^p) by the p-th root h with h(u)^p == f(u).
Poly pth_root(const Field& F, const Poly& f) {
    const uint64_t p = F.p();
    std::vector<Fe> out;
    out.reserve(f.c.size() / p + 1);
    const uint64_t root_exp = F.q() / p; // Frobenius inverse: x -> x^(q/p)
    for (size_t i = 0; i < f.c.size(); i += p) out.push_back(F.pow(f.c[i], root_exp));
    return Poly::from_coeffs(std::move(out));
}

} // namespace

Poly squarefree_part(const Field& F, const Poly& f) {
    if (f.is_zero()) fail(Errc::DivisionByZero, "squarefree part of zero");
    Poly fm = monic(F, f);
    if (fm.deg() == 0) return Poly::constant(F.one());

    Poly d = derivative(F, fm);
    if (d.is_zero()) {
        // f = h(u)^p; odd p preserves multiplicity parity
        return squarefree_part(F, pth_root(F, fm));
    }

    Poly c = gcd(F, fm, d);
    Poly w = divrem(F, fm, c).first; // product of factors with multiplicity prime to p
    Poly result = Poly::constant(F.one());
    uint64_t k = 1;
    while (w.deg() > 0) {
        Poly y = gcd(F, w, c);
        Poly z = divrem(F, w, y).first; // factors of multiplicity exactly k
        if (k % 2 == 1) result = mul(F, result, z);
        w = std::move(y);
        c = divrem(F, c, w).first;
        ++k;
    }
    // remaining c collects factors with multiplicity divisible by p
    if (c.deg() > 0) result = mul(F, result, squarefree_part(F, pth_root(F, c)));
    return monic(F, result);
}

} // namespace lcseq::poly
