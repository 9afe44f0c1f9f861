#include "lcseq/gf.hpp"

#include <algorithm>
#include <numeric>

#include "lcseq/nt.hpp"

namespace lcseq::gf {

namespace {

// Polynomial helpers over F_p with plain uint32_t coefficient vectors
// (ascending degree). Only used for modulus validation and selection; all
// field arithmetic afterwards goes through the element tables.

using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mod(FpPoly f, const FpPoly& g, uint64_t p) {
    // g monic
    fp_trim(f);
    const int dg = fp_deg(g);
    while (fp_deg(f) >= dg) {
        const uint64_t c = f.back();
        const int shift = fp_deg(f) - dg;
        for (int i = 0; i <= dg; ++i) {
            uint64_t t = f[i + shift] + p * p - c * g[i] % p;
            f[i + shift] = static_cast<uint32_t>(t % p);
        }
        fp_trim(f);
    }
    return f;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& g, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + (uint64_t)a[i] * b[j]) % p);
        }
    }
    return fp_mod(std::move(prod), g, p);
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& g, uint64_t p) {
    FpPoly result{1};
    base = fp_mod(std::move(base), g, p);
    while (e > 0) {
        if (e & 1) result = fp_mulmod(result, base, g, p);
        base = fp_mulmod(base, base, g, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic so fp_mod applies
        FpPoly bm = b;
        uint64_t lead = bm.back();
        if (lead != 1) {
            // inverse of lead mod p by Fermat
            uint64_t li = 1, x = lead, e = p - 2;
            while (e) {
                if (e & 1) li = li * x % p;
                x = x * x % p;
                e >>= 1;
            }
            for (auto& c : bm) c = static_cast<uint32_t>(c * li % p);
        }
        FpPoly r = fp_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& f, uint64_t p) {
    const int m = fp_deg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    // x^(p^m) == x (mod f), and gcd(x^(p^(m/r)) - x, f) == 1 for prime r | m
    FpPoly x{0, 1};
    uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    FpPoly xq = fp_powmod(x, pm, f, p);
    if (xq != fp_mod(x, f, p)) return false;
    for (const auto& [r, e] : nt::factorize(static_cast<uint64_t>(m))) {
        (void)e;
        uint64_t pk = 1;
        for (uint64_t i = 0; i < m / r; ++i) pk *= p;
        FpPoly xk = fp_powmod(x, pk, f, p);
        // xk - x
        FpPoly diff = xk;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

// Order of the class of t in (F_p[t]/(f))^* equals q - 1?
bool fp_root_is_primitive(const FpPoly& f, uint64_t p, uint64_t q) {
    FpPoly x{0, 1};
    for (const auto& [r, e] : nt::factorize(q - 1)) {
        (void)e;
        FpPoly t = fp_powmod(x, (q - 1) / r, f, p);
        if (t == FpPoly{1}) return false;
    }
    return true;
}

uint64_t pow_u64_checked(uint64_t p, uint32_t m, uint64_t cap) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (q > cap / p) return 0;
        q *= p;
    }
    return q;
}

} // namespace

Field Field::make(uint64_t p, uint32_t m, const std::optional<std::vector<uint32_t>>& modulus,
                  bool require_primitive) {
    if (p == 2) fail(Errc::EvenCharacteristic, "even characteristic unsupported");
    if (!nt::is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail(Errc::OutOfRange, "extension degree must be >= 1");
    const uint64_t q = pow_u64_checked(p, m, max_q);
    if (q == 0)
        fail(Errc::Overflow, "q = p^m exceeds the supported cap " + std::to_string(max_q));

    Field F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = q;
    F.pow_p_.resize(m + 1);
    F.pow_p_[0] = 1;
    for (uint32_t i = 1; i <= m; ++i) F.pow_p_[i] = static_cast<uint32_t>(F.pow_p_[i - 1] * p);

    if (modulus.has_value()) {
        const auto& f = *modulus;
        if (f.size() != m + 1 || f.back() != 1)
            fail(Errc::ReducibleModulus, "modulus must be monic of degree m");
        for (uint32_t c : f)
            if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range [0, p)");
        if (m >= 2 && !fp_is_irreducible(f, p))
            fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
        if (require_primitive) {
            bool prim;
            if (m == 1) {
                // class of t is -c0
                uint64_t root = (p - f[0] % p) % p;
                if (root == 0) {
                    prim = false;
                } else {
                    prim = true;
                    for (const auto& [r, e] : nt::factorize(p - 1)) {
                        (void)e;
                        uint64_t t = 1, x = root, ee = (p - 1) / r;
                        while (ee) {
                            if (ee & 1) t = t * x % p;
                            x = x * x % p;
                            ee >>= 1;
                        }
                        if (t == 1) {
                            prim = false;
                            break;
                        }
                    }
                }
            } else {
                prim = fp_root_is_primitive(f, p, q);
            }
            if (!prim) fail(Errc::NotPrimitiveModulus, "modulus root does not generate F_q^*");
        }
        F.modulus_ = f;
    } else if (m == 1) {
        F.modulus_ = {0, 1}; // t
    } else {
        // First monic polynomial, ordered by (c_{m-1}, ..., c_0) ascending,
        // that is irreducible with a primitive root.
        std::vector<uint32_t> c(m, 0); // c[0] = c_{m-1}, ..., c[m-1] = c_0
        bool found = false;
        while (true) {
            FpPoly f(m + 1, 0);
            f[m] = 1;
            for (uint32_t i = 0; i < m; ++i) f[m - 1 - i] = c[i];
            if (fp_is_irreducible(f, p) && fp_root_is_primitive(f, p, q)) {
                F.modulus_ = f;
                found = true;
                break;
            }
            // next tuple, last digit fastest
            int i = static_cast<int>(m) - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
        if (!found) fail(Errc::Internal, "no primitive modulus found"); // cannot happen
    }

    F.q1_factors_ = nt::factorize(q - 1);
    F.build_tables();
    return F;
}

Fe Field::elem(uint64_t enc) const {
    if (enc >= q_) fail(Errc::OutOfRange, "element encoding out of range [0, q)");
    return Fe{static_cast<uint32_t>(enc)};
}

Fe Field::from_int(int64_t k) const {
    int64_t r = k % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    return Fe{static_cast<uint32_t>(r)};
}

std::vector<uint32_t> Field::coeffs(Fe a) const {
    std::vector<uint32_t> out(m_);
    uint64_t v = a.v;
    for (uint32_t i = 0; i < m_; ++i) {
        out[i] = static_cast<uint32_t>(v % p_);
        v /= p_;
    }
    return out;
}

Fe Field::add(Fe a, Fe b) const {
    uint64_t x = a.v, y = b.v, r = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * pow_p_[i];
        x /= p_;
        y /= p_;
    }
    return Fe{static_cast<uint32_t>(r)};
}

Fe Field::neg(Fe a) const {
    uint64_t x = a.v, r = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        x /= p_;
    }
    return Fe{static_cast<uint32_t>(r)};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul_generic(Fe a, Fe b) const {
    // schoolbook product of digit vectors reduced mod the modulus
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    const auto ca = coeffs(a), cb = coeffs(b);
    for (uint32_t i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) prod[i + j] += (uint64_t)ca[i] * cb[j];
    }
    for (auto& c : prod) c %= p_;
    // reduce by monic modulus
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(m_); --d) {
        uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t t = prod[d - m_ + i] + p_ * p_ - c * modulus_[i] % p_;
            prod[d - m_ + i] = t % p_;
        }
    }
    uint64_t r = 0;
    for (uint32_t i = 0; i < m_; ++i) r += prod[i] % p_ * pow_p_[i];
    return Fe{static_cast<uint32_t>(r)};
}

void Field::build_tables() {
    // Find a generator of F_q^*: the class of t first (it is one whenever the
    // default modulus was selected), then ascending enc order.
    auto order_ok = [&](Fe g) {
        for (const auto& [r, e] : q1_factors_) {
            (void)e;
            uint64_t exp = (q_ - 1) / r;
            Fe acc = one(), base = g;
            while (exp) {
                if (exp & 1) acc = mul_generic(acc, base);
                base = mul_generic(base, base);
                exp >>= 1;
            }
            if (acc == one()) return false;
        }
        return true;
    };

    Fe gen = zero();
    bool found = false;
    if (m_ >= 2 && order_ok(Fe{static_cast<uint32_t>(p_)})) {
        gen = Fe{static_cast<uint32_t>(p_)};
        found = true;
    }
    if (!found) {
        for (uint64_t v = 2; v < q_; ++v) {
            if (order_ok(Fe{static_cast<uint32_t>(v)})) {
                gen = Fe{static_cast<uint32_t>(v)};
                found = true;
                break;
            }
        }
    }
    if (!found) fail(Errc::Internal, "no generator of F_q^* found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Fe cur = one();
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur.v;
        if (cur.v != 0 && log_[cur.v] == 0 && cur.v != 1) log_[cur.v] = static_cast<uint32_t>(i);
        cur = mul_generic(cur, gen);
    }
    if (cur != one()) fail(Errc::Internal, "generator order mismatch");
    log_[1] = 0;
    // verify bijectivity
    std::vector<bool> seen(q_, false);
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        if (exp_[i] == 0 || seen[exp_[i]]) fail(Errc::Internal, "exp table not a bijection");
        seen[exp_[i]] = true;
    }
}

Fe Field::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return zero();
    uint64_t l = log_[a.v] + log_[b.v];
    if (l >= q_ - 1) l -= q_ - 1;
    return Fe{exp_[l]};
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) fail(Errc::DivisionByZero, "inverse of zero");
    uint64_t l = log_[a.v];
    return Fe{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Fe Field::pow(Fe a, uint64_t e) const {
    if (a.v == 0) return e == 0 ? one() : zero();
    uint64_t l = log_[a.v] % (q_ - 1);
    uint64_t er = e % (q_ - 1);
    return Fe{exp_[l * er % (q_ - 1)]};
}

bool Field::is_square(Fe a) const {
    if (a.v == 0) return true;
    return log_[a.v] % 2 == 0;
}

int Field::eta(Fe a) const { return is_square(a) ? 1 : -1; }

uint64_t Field::mult_order(Fe a) const {
    if (a.v == 0) fail(Errc::DivisionByZero, "multiplicative order of zero");
    uint64_t l = log_[a.v];
    return (q_ - 1) / std::gcd(q_ - 1, l);
}

std::vector<Fe> Field::elements() const {
    std::vector<Fe> out;
    out.reserve(q_);
    for (uint64_t v = 0; v < q_; ++v) out.push_back(Fe{static_cast<uint32_t>(v)});
    return out;
}

} // namespace lcseq::gf
