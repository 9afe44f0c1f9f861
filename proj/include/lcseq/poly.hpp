#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcseq/gf.hpp"

namespace lcseq::poly {

using gf::Fe;
using gf::Field;

/// Dense univariate polynomial over F_q, coefficients ascending, no trailing
/// zeros (the zero polynomial has an empty coefficient vector). Everything at
/// play here has degree <= 2(q+1), so no sparse or FFT machinery.
struct Poly {
    std::vector<Fe> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    Fe lead() const { return c.back(); }
    Fe coeff(size_t i) const { return i < c.size() ? c[i] : Fe{0}; }

    static Poly zero() { return {}; }
    static Poly constant(Fe a) { return a.v == 0 ? Poly{} : Poly{{a}}; }
    static Poly from_coeffs(std::vector<Fe> coeffs);

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// x
Poly poly_x(const Field& F);
/// u^2 + a u + b
Poly quadratic(const Field& F, Fe a, Fe b);
/// u - alpha
Poly linear(const Field& F, Fe alpha);

Poly add(const Field& F, const Poly& f, const Poly& g);
Poly sub(const Field& F, const Poly& f, const Poly& g);
Poly mul(const Field& F, const Poly& f, const Poly& g);
Poly scale(const Field& F, const Poly& f, Fe s);
Poly monic(const Field& F, const Poly& f);

/// Euclidean division: f = q*g + r with deg r < deg g. Throws DivisionByZero
/// when g == 0.
std::pair<Poly, Poly> divrem(const Field& F, const Poly& f, const Poly& g);

/// Monic gcd; gcd(f, 0) = monic(f). gcd(0, 0) throws DivisionByZero.
Poly gcd(const Field& F, Poly f, Poly g);

/// Horner evaluation.
Fe eval(const Field& F, const Poly& f, Fe x);

/// f^e mod g by square-and-multiply; g must be nonconstant.
Poly powmod(const Field& F, Poly f, uint64_t e, const Poly& g);

/// Formal derivative.
Poly derivative(const Field& F, const Poly& f);

/// Inverse of f modulo g (extended Euclid); gcd(f, g) must be constant.
Poly modular_inverse(const Field& F, const Poly& f, const Poly& g);

/// x^2 + a x + b has no root in F_q, i.e. eta(a^2 - 4b) == -1.
bool is_irreducible_quadratic(const Field& F, Fe a, Fe b);

/// Irreducible and the class of x in F_q[x]/(x^2+ax+b) has multiplicative
/// order q^2 - 1 (checked against each prime divisor of q^2 - 1).
bool is_primitive_quadratic(const Field& F, Fe a, Fe b);

/// First (a, b) in ascending (enc(a), enc(b)) order passing
/// is_primitive_quadratic. Exists for every q >= 3.
std::pair<Fe, Fe> first_primitive_quadratic(const Field& F);

/// Monic product of the irreducible factors of f with odd multiplicity.
/// Full characteristic-p treatment: p-th power parts are handled by
/// coefficient p-th roots and recursion, so multiplicity parity is exact
/// even for p-th-power factors. Throws DivisionByZero on f == 0.
Poly squarefree_part(const Field& F, const Poly& f);

} // namespace lcseq::poly
