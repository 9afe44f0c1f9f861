#include "lcseq/construct.hpp"

#include <algorithm>

namespace lcseq::construct {

using poly::Poly;

FamilyParams make_params(const Field& F, Fe a, Fe b) {
    if (!poly::is_primitive_quadratic(F, a, b))
        fail(Errc::NotPrimitive, "x^2 + a x + b is not a primitive irreducible quadratic");
    return FamilyParams{a, b, mobius::orbit(F, a, b)};
}

std::vector<Fe> delta_set(const Field& F, Fe a, Fe b) {
    const uint64_t q = F.q();
    // excluded = { a^2/4 - b - s : s in F_q^2 (squares incl. 0) }
    std::vector<bool> excluded(q, false);
    const Fe base = F.sub(F.mul(F.mul(a, a), F.inv(F.from_int(4))), b);
    for (uint64_t v = 0; v < q; ++v) {
        Fe s = F.mul(Fe{static_cast<uint32_t>(v)}, Fe{static_cast<uint32_t>(v)});
        excluded[F.sub(base, s).v] = true;
    }
    std::vector<Fe> out;
    for (uint64_t v = 1; v < q; ++v)
        if (!excluded[v]) out.push_back(Fe{static_cast<uint32_t>(v)});
    if (out.size() != (q - 3) / 2)
        fail(Errc::Internal, "delta set size != (q-3)/2; (a, b) not irreducible?");
    return out;
}

namespace {

// Does u^2 + c u + d lie over x^2 + a x + (b + delta)? Works in the field
// F_q[u]/(g): computes X = (beta^(q+1) + a beta + b)/(beta^q - beta) and
// tests X^2 + a X + (b + delta) == 0.
bool lift_relation_holds(const Field& F, const Poly& g, Fe a, Fe b, Fe delta) {
    const Poly u = poly::poly_x(F);
    const Poly beta_q = poly::powmod(F, u, F.q(), g);
    const Poly denom = poly::sub(F, beta_q, u);
    if (denom.is_zero()) return false; // cannot happen for irreducible g
    const Poly beta_q1 = poly::divrem(F, poly::mul(F, beta_q, u), g).second;
    Poly numer = poly::add(F, beta_q1, poly::Poly::from_coeffs({b, a})); // + a*beta + b
    const Poly x_val = poly::divrem(F, poly::mul(F, numer, poly::modular_inverse(F, denom, g)), g).second;
    Poly rel = poly::add(F, poly::divrem(F, poly::mul(F, x_val, x_val), g).second,
                         poly::scale(F, x_val, a));
    rel = poly::add(F, rel, Poly::constant(F.add(b, delta)));
    rel = poly::divrem(F, rel, g).second;
    return rel.is_zero();
}

} // namespace

std::pair<Fe, Fe> lift_place(const Field& F, Fe a, Fe b, Fe delta) {
    for (uint64_t ec = 0; ec < F.q(); ++ec) {
        for (uint64_t ed = 0; ed < F.q(); ++ed) {
            Fe c{static_cast<uint32_t>(ec)}, d{static_cast<uint32_t>(ed)};
            if (!poly::is_irreducible_quadratic(F, c, d)) continue;
            if (lift_relation_holds(F, poly::quadratic(F, c, d), a, b, delta)) return {c, d};
        }
    }
    fail(Errc::NoLift, "no quadratic lies over x^2 + a x + b + delta");
}

std::vector<std::pair<Fe, Fe>> valid_lifts(const Field& F, Fe a, Fe b, Fe delta) {
    std::vector<std::pair<Fe, Fe>> out;
    for (uint64_t ec = 0; ec < F.q(); ++ec) {
        for (uint64_t ed = 0; ed < F.q(); ++ed) {
            Fe c{static_cast<uint32_t>(ec)}, d{static_cast<uint32_t>(ed)};
            if (!poly::is_irreducible_quadratic(F, c, d)) continue;
            if (lift_relation_holds(F, poly::quadratic(F, c, d), a, b, delta))
                out.emplace_back(c, d);
        }
    }
    return out;
}

std::vector<Representative> build_r1(const Field& F, const FamilyParams& params) {
    const Poly den = poly::quadratic(F, params.a, params.b);
    std::vector<Representative> out;
    int index = 1;
    for (Fe delta : delta_set(F, params.a, params.b)) {
        auto [c, d] = lift_place(F, params.a, params.b, delta);
        out.push_back(Representative{Representative::Kind::R1, index++,
                                     RationalFn{poly::quadratic(F, c, d), den}, delta, -1});
    }
    return out;
}

std::vector<Representative> build_r2(const Field& F, const FamilyParams& params) {
    const Poly den = poly::quadratic(F, params.a, params.b);
    const uint64_t q = F.q();
    std::vector<Representative> out;
    for (uint64_t j = 2; j <= (q + 1) / 2; ++j) {
        const auto& alpha = params.orbit.alphas[j];
        if (!alpha.has_value()) fail(Errc::Internal, "orbit point at j != 1 must be finite");
        const int index = static_cast<int>((q - 5) / 2 + j);
        out.push_back(Representative{Representative::Kind::R2, index,
                                     RationalFn{poly::linear(F, *alpha), den}, *alpha,
                                     static_cast<int>(j)});
    }
    return out;
}

std::vector<Representative> assemble_family(const Field& F, const FamilyParams& params) {
    std::vector<Representative> family = build_r1(F, params);
    std::vector<Representative> r2 = build_r2(F, params);
    family.insert(family.end(), r2.begin(), r2.end());
    if (family.size() != F.q() - 2) fail(Errc::Internal, "family size != q - 2");
    for (size_t i = 0; i < family.size(); ++i)
        if (family[i].index != static_cast<int>(i) + 1)
            fail(Errc::Internal, "family positions out of order");
    return family;
}

std::optional<Fe> eval_place(const Field& F, const RationalFn& z, uint64_t j,
                             const OrbitTable& orbit) {
    if (j >= orbit.alphas.size()) fail(Errc::OutOfRange, "place index out of range");
    if (!orbit.alphas[j].has_value()) {
        const int dn = z.num.deg(), dd = z.den.deg();
        if (dn > dd) return std::nullopt;
        if (dn < dd) return F.zero();
        return F.mul(z.num.lead(), F.inv(z.den.lead()));
    }
    const Fe alpha = *orbit.alphas[j];
    const Fe den_v = poly::eval(F, z.den, alpha);
    if (den_v.v == 0) return std::nullopt;
    return F.mul(poly::eval(F, z.num, alpha), F.inv(den_v));
}

Fe evaluate_at_place(const Field& F, const RationalFn& z, uint64_t j, const OrbitTable& orbit) {
    auto v = eval_place(F, z, j, orbit);
    if (!v.has_value()) fail(Errc::PoleAtPlace, "representative has a pole at a rational place");
    return *v;
}

BinSeq BinSeq::from_values(std::vector<int8_t> values) {
    BinSeq s;
    s.values = std::move(values);
    s.packed.assign((s.values.size() + 63) / 64, 0);
    for (size_t i = 0; i < s.values.size(); ++i)
        if (s.values[i] < 0) s.packed[i / 64] |= uint64_t{1} << (i % 64);
    return s;
}

std::vector<BinSeq> generate_sequences(const Field& F, const FamilyParams& params,
                                       const std::vector<Representative>& reps) {
    const uint64_t q = F.q();
    std::vector<BinSeq> out;
    out.reserve(reps.size());
    for (const auto& rep : reps) {
        std::vector<int8_t> values(q + 1);
        for (uint64_t j = 0; j <= q; ++j)
            values[j] = static_cast<int8_t>(F.eta(evaluate_at_place(F, rep.fn, j, params.orbit)));
        if (values[1] != 1) fail(Errc::Internal, "entry at the infinite place must be +1");
        out.push_back(BinSeq::from_values(std::move(values)));
    }
    return out;
}

Family generate(const Field& F, std::optional<std::pair<Fe, Fe>> ab) {
    const auto [a, b] = ab.has_value() ? *ab : poly::first_primitive_quadratic(F);
    FamilyParams params = make_params(F, a, b);

    Family fam;
    fam.p = F.p();
    fam.m = F.m();
    fam.field_modulus = F.modulus();
    fam.a = a;
    fam.b = b;
    fam.deltas = delta_set(F, a, b);
    fam.reps = assemble_family(F, params);
    for (const auto& rep : fam.reps)
        if (rep.kind == Representative::Kind::R1)
            fam.lifts.emplace_back(rep.fn.num.coeff(1), rep.fn.num.coeff(0));
    fam.seqs = generate_sequences(F, params, fam.reps);
    fam.alphas = std::move(params.orbit.alphas);
    return fam;
}

} // namespace lcseq::construct
