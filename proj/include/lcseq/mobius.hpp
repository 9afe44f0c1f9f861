#pragma once

#include <optional>
#include <vector>

#include "lcseq/poly.hpp"

namespace lcseq::mobius {

using gf::Fe;
using gf::Field;

/// Projective 2x2 matrix [[a, b], [c, d]] acting on u by
/// u -> (a u + b) / (c u + d); the determinant ad - bc must be nonzero.
struct Mobius {
    Fe a, b, c, d;
    friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// A rational function num/den in u. The representation is not reduced
/// automatically; the construction keeps num monic and den fixed to the
/// family quadratic u^2 + a u + b.
struct RationalFn {
    poly::Poly num;
    poly::Poly den;
};

Mobius identity(const Field& F);

/// The order-(q+1) automorphism u -> -b / (u + a) as [[0, -b], [1, a]].
/// Throws SingularMap when b == 0.
Mobius sigma_from(const Field& F, Fe a, Fe b);

Fe det(const Field& F, const Mobius& m);
Mobius compose(const Field& F, const Mobius& lhs, const Mobius& rhs); // matrix product
Mobius inverse(const Field& F, const Mobius& m);                      // adjugate
bool is_scalar(const Field& F, const Mobius& m);

/// Least k > 0 with m^k scalar.
uint64_t projective_order(const Field& F, const Mobius& m);

/// The iterates sigma^j for j = 0..q together with the orbit points.
/// maps[0] is the identity and maps[1] = [[0, -b], [1, a]]; each next entry
/// follows the coefficient recursion
///   a_{j+1} = b_j,  b_{j+1} = -b a_j + a b_j,
///   c_{j+1} = d_j,  d_{j+1} = -b c_j + a d_j.
/// alphas[j] is the zero of sigma^j(u), i.e. -b_j / a_j (NOT the image of 0
/// under the matrix action: the two conventions differ and swapping them
/// silently permutes every sequence built on top). alphas[1] is the infinite
/// place; the q+1 entries are pairwise distinct and cover F_q plus infinity.
struct OrbitTable {
    std::vector<Mobius> maps;
    std::vector<std::optional<Fe>> alphas; // nullopt = infinity (only at j == 1)
};

/// Builds the orbit table and verifies every invariant above before
/// returning; a failure throws OrbitDegenerate and certifies that (a, b) is
/// not a valid primitive-quadratic parameter pair, independent of the
/// multiplicative-order primitivity test.
OrbitTable orbit(const Field& F, Fe a, Fe b);

/// z composed with the matrix action: substitute u <- (a u + b)/(c u + d)
/// into num and den and clear the common (c u + d)^L factor, L = max degree.
/// Degrees never grow.
RationalFn pullback(const Field& F, const Mobius& m, const RationalFn& z);

} // namespace lcseq::mobius
