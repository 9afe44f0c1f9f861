#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcseq/errors.hpp"

namespace lcseq::gf {

/// Element of a finite field F_q, stored as its canonical integer encoding
/// enc(a) = sum_i a_i * p^i for the coefficient vector (a_0, ..., a_{m-1}).
/// The encoding is a bijection [0, q) <-> F_q with enc(0) = 0 and enc(1) = 1,
/// and all "first found" searches in the library scan in ascending enc order.
struct Fe {
    uint32_t v = 0;
    friend constexpr bool operator==(Fe, Fe) = default;
    friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// Exact arithmetic in F_q = F_p[t]/(f(t)) for an odd prime p and a monic
/// irreducible f of degree m, including the quadratic character eta
/// (extended with eta(0) = +1).
///
/// Multiplication, inversion, powers and the character are table-driven
/// (discrete exp/log against an internal generator); addition works on the
/// base-p digits of the encoding. A Field is immutable after construction
/// and every operation is a pure function, so concurrent use is safe.
class Field {
  public:
    /// Largest supported field size. The construction is a desk-scale tool;
    /// the cap keeps q^2 comfortably inside 64 bits and the exp/log tables
    /// small.
    static constexpr uint64_t max_q = 20000;

    /// Build F_{p^m}. If no modulus is given it is chosen canonically: for
    /// m == 1 the modulus is t; for m >= 2 it is the first monic polynomial
    /// in ascending coefficient order (compared by (c_{m-1}, ..., c_0))
    /// whose root generates F_q^*. A caller-supplied modulus (ascending
    /// coefficients, length m+1, monic) is validated for irreducibility,
    /// and for primitivity of its root when require_primitive is set.
    static Field make(uint64_t p, uint32_t m,
                      const std::optional<std::vector<uint32_t>>& modulus = std::nullopt,
                      bool require_primitive = false);

    uint64_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    /// Modulus coefficients, ascending, length m+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }

    /// Element with the given encoding; throws OutOfRange for enc >= q.
    Fe elem(uint64_t enc) const;
    /// The integer k embedded via k mod p (negative k allowed).
    Fe from_int(int64_t k) const;
    uint64_t enc(Fe a) const { return a.v; }
    /// Base-p digits (a_0, ..., a_{m-1}) of the element.
    std::vector<uint32_t> coeffs(Fe a) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    /// Multiplicative inverse; throws DivisionByZero on 0.
    Fe inv(Fe a) const;
    /// a^e with a 64-bit exponent; 0^0 == 1.
    Fe pow(Fe a, uint64_t e) const;

    /// True iff a == 0 or a^((q-1)/2) == 1.
    bool is_square(Fe a) const;
    /// Quadratic character: +1 on squares (including 0), -1 otherwise.
    int eta(Fe a) const;

    /// Least k > 0 with a^k == 1; throws DivisionByZero on 0.
    uint64_t mult_order(Fe a) const;

    /// All q elements in ascending enc order.
    std::vector<Fe> elements() const;

    /// Prime factorization of q - 1 (cached at construction).
    const std::vector<std::pair<uint64_t, uint32_t>>& q_minus_1_factors() const {
        return q1_factors_;
    }

  private:
    Field() = default;

    Fe mul_generic(Fe a, Fe b) const; // digit-vector multiply, used to build tables
    void build_tables();

    uint64_t p_ = 0;
    uint32_t m_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> pow_p_;   // p^0 .. p^m
    std::vector<uint32_t> exp_;     // exp_[i] = g^i, i in [0, q-1)
    std::vector<uint32_t> log_;     // log_[enc] for enc != 0
    std::vector<std::pair<uint64_t, uint32_t>> q1_factors_;
};

} // namespace lcseq::gf
