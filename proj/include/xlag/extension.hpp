#ifndef XLAG_EXTENSION_HPP
#define XLAG_EXTENSION_HPP

#include <array>
#include <utility>

#include "xlag/seeds.hpp"
#include "xlag/ssusy.hpp"

namespace xlag {

enum class Case { I, II, III };

inline const char* case_name(Case c) {
    switch (c) {
        case Case::I: return "i";
        case Case::II: return "ii";
        case Case::III: return "iii";
    }
    return "?";
}

struct ExtensionSpec {
    Case kase;
    int l;        // angular momentum of the extended potential
    int m1, m2;
    Rational omega;

    int l_start() const {
        switch (kase) {
            case Case::I: return l - 2;
            case Case::II: return l + 2;
            case Case::III: return l;
        }
        return l;
    }

    void validate() const {
        if (l < 0) throw ConstraintViolation("l must be >= 0");
        if (omega <= 0) throw ConstraintViolation("omega must be > 0");
        if (m1 < 0 || m2 < 0) throw ConstraintViolation("m1, m2 must be >= 0");
        if (l_start() < 0) throw ConstraintViolation("starting potential index l' is negative");
        Rational alpha = alpha_of(l);
        switch (kase) {
            case Case::I:
                if (!(m1 < m2)) throw ConstraintViolation("case (i) requires m1 < m2");
                break;
            case Case::II:
                if (!(m1 < m2)) throw ConstraintViolation("case (ii) requires m1 < m2");
                if (!(Rational(m2) < alpha + 2))
                    throw ConstraintViolation("case (ii) requires m2 < alpha + 2");
                break;
            case Case::III:
                if (!(Rational(m2) < alpha))
                    throw ConstraintViolation("case (iii) requires m2 < alpha");
                break;
        }
    }
};

/// Raw denominator polynomial for given case, alpha, and Laguerre indices
/// (no constraints imposed; the identities hold for any rational alpha):
///   (i)   W(L_{m1}^(a-2)(-z),  L_{m2}^(a-2)(-z))
///   (ii)  W(L_{m1}^(-a-2)(z),  L_{m2}^(-a-2)(z))
///   (iii) z W(L_{m1}^(a)(-z), L_{m2}^(-a)(z))
///           - (z + a) L_{m1}^(a)(-z) L_{m2}^(-a)(z)
inline Poly g_raw(Case kase, const Rational& alpha, int m1, int m2) {
    const unsigned u1 = static_cast<unsigned>(m1), u2 = static_cast<unsigned>(m2);
    switch (kase) {
        case Case::I:
            return wronskian(laguerre_neg(u1, alpha - 2), laguerre_neg(u2, alpha - 2));
        case Case::II:
            return wronskian(laguerre(u1, -alpha - 2), laguerre(u2, -alpha - 2));
        case Case::III: {
            Poly f1 = laguerre_neg(u1, alpha);
            Poly f2 = laguerre(u2, -alpha);
            Poly z = Poly::identity();
            return z * wronskian(f1, f2) - (z + Poly::constant(alpha)) * f1 * f2;
        }
    }
    return Poly();
}

inline int mu_of(Case kase, int m1, int m2) {
    return kase == Case::III ? m1 + m2 + 1 : m1 + m2 - 1;
}

/// Canonically normalized g with its degree mu. Scale is irrelevant
/// downstream (everything is a log-derivative of g).
inline std::pair<Poly, int> build_g(const ExtensionSpec& spec) {
    spec.validate();
    Poly g = g_raw(spec.kase, alpha_of(spec.l), spec.m1, spec.m2);
    if (g.is_zero()) throw DegenerateWronskian("g vanishes identically");
    int mu = mu_of(spec.kase, spec.m1, spec.m2);
    if (g.degree() != mu)
        throw IdentityViolation("deg(g) != mu for the requested construction");
    return {g.normalized(), mu};
}

inline bool check_admissible(const Poly& g) {
    return count_positive_roots(g) == 0;
}

/// The two seeds behind the construction, solutions of V_{l'}.
inline std::pair<Seed, Seed> seeds_for(const ExtensionSpec& spec) {
    spec.validate();
    int lp = spec.l_start();
    switch (spec.kase) {
        case Case::I:
            return {make_seed({SeedKind::TypeI, lp, spec.m1, spec.omega}),
                    make_seed({SeedKind::TypeI, lp, spec.m2, spec.omega})};
        case Case::II:
            return {make_seed({SeedKind::TypeII, lp, spec.m1, spec.omega}),
                    make_seed({SeedKind::TypeII, lp, spec.m2, spec.omega})};
        case Case::III:
            return {make_seed({SeedKind::TypeI, lp, spec.m1, spec.omega}),
                    make_seed({SeedKind::TypeII, lp, spec.m2, spec.omega})};
    }
    throw Error("unreachable");
}

struct ExtendedPotential {
    ExtensionSpec spec;
    Poly g;
    int mu;
    Rational alpha;
    Rational C;     // -2 omega, +2 omega, or 0
    Rational E1, E2;
};

/// Rational deformation -omega { 2 g'/g + 4z [ g''/g - (g'/g)^2 ] } in z.
inline RatFunc rational_part_z(const Poly& g, const Rational& omega) {
    RatFunc G = RatFunc::from_poly(g);
    RatFunc dg = RatFunc::from_poly(g.derivative());
    RatFunc ddg = RatFunc::from_poly(g.derivative().derivative());
    RatFunc lg = dg / G;
    RatFunc z = RatFunc::from_poly(Poly::identity());
    return (-omega) * (Rational(2) * lg + Rational(4) * z * (ddg / G - lg * lg));
}

inline ExtendedPotential build_extension(const ExtensionSpec& spec) {
    auto [g, mu] = build_g(spec);
    if (!check_admissible(g))
        throw InadmissibleDenominator("g has a zero on the positive half-line");
    auto [s1, s2] = seeds_for(spec);
    Rational C;
    switch (spec.kase) {
        case Case::I: C = -2 * spec.omega; break;
        case Case::II: C = 2 * spec.omega; break;
        case Case::III: C = 0; break;
    }
    return {spec, g, mu, alpha_of(spec.l), C, s1.energy, s2.energy};
}

/// V^(1) = V_{l'} - (E1+E2)/2.
inline Potential potential_V1(const ExtendedPotential& ext) {
    Potential p = Potential::bare(ext.spec.omega, Rational(ext.spec.l_start()));
    p.constant = -(ext.E1 + ext.E2) / 2;
    return p;
}

/// V^(2) = V_l + V_rat - (E1+E2)/2 + C.
inline Potential potential_V2(const ExtendedPotential& ext, bool drop_constant = false) {
    Potential p{ext.spec.omega, Rational(ext.spec.l),
                rational_part_z(ext.g, ext.spec.omega), Rational(0)};
    if (!drop_constant) p.constant = -(ext.E1 + ext.E2) / 2 + ext.C;
    return p;
}

enum class SpectrumConvention { Construction, ConstantDropped };

/// Bound-state energies. With the construction's constant kept:
///   (i)   omega (2 nu + 2l + m1 + m2 - 1)
///   (ii)  omega (2 nu + 2l - m1 - m2 + 5)
///   (iii) omega (2 nu + 2l + m1 - m2 + 2)
/// With the constant dropped (V_l + V_rat alone): omega (2 nu + alpha + 1).
inline Rational spectrum_energy(const ExtendedPotential& ext, unsigned nu,
                                SpectrumConvention conv) {
    const Rational& w = ext.spec.omega;
    const int l = ext.spec.l, m1 = ext.spec.m1, m2 = ext.spec.m2;
    if (conv == SpectrumConvention::ConstantDropped)
        return w * (2 * nu + ext.alpha + 1);
    switch (ext.spec.kase) {
        case Case::I: return w * Rational(2 * static_cast<int>(nu) + 2 * l + m1 + m2 - 1);
        case Case::II: return w * Rational(2 * static_cast<int>(nu) + 2 * l - m1 - m2 + 5);
        case Case::III: return w * Rational(2 * static_cast<int>(nu) + 2 * l + m1 - m2 + 2);
    }
    throw Error("unreachable");
}

/// V_rat as an exact rational function of x (z = omega x^2/2 substituted).
inline Poly substitute_z_of_x(const Poly& p_z, const Rational& omega) {
    if (p_z.is_zero()) return Poly();
    std::vector<Rational> cs(2 * p_z.degree() + 1);
    Rational zc = omega / 2, power(1);
    for (int k = 0; k <= p_z.degree(); ++k) {
        cs[2 * k] = p_z.coeff(k) * power;
        power *= zc;
    }
    return Poly(std::move(cs));
}

inline RatFunc substitute_z_of_x(const RatFunc& r, const Rational& omega) {
    return RatFunc(substitute_z_of_x(r.num(), omega), substitute_z_of_x(r.den(), omega));
}

inline RatFunc rational_part_x(const Poly& g, const Rational& omega) {
    return substitute_z_of_x(rational_part_z(g, omega), omega);
}

inline RatFunc rational_part_x(const ExtendedPotential& ext) {
    return rational_part_x(ext.g, ext.spec.omega);
}

/// Runs the full second-order consistency chain for one construction:
/// both closed forms of p(x) must agree, V^(2) - V^(1) = 4p' must hold,
/// and the reconstructed potentials must match the assembled ones up to
/// additive constants. Returns those constants.
inline SsusyCheckResult verify_ssusy(const ExtendedPotential& ext) {
    auto [s1, s2] = seeds_for(ext.spec);
    QRF p = p_from_seeds(s1.phi, s2.phi, s1.energy, s2.energy);
    Rational c = s1.energy - s2.energy;
    return ssusy_check(p, c, potential_V1(ext).as_qrf(), potential_V2(ext).as_qrf());
}

/// Three-seed Wronskian collapses for (m1,m2,m3) = (1,2,3):
///   W(L_1^(a-3)(-z), L_2^(a-3)(-z), L_3^(a-3)(-z))  ~  L_3^(-a-1)(z)
///   W(L_1^(-a-3)(z), L_2^(-a-3)(z), L_3^(-a-3)(z))  ~  L_3^(a-1)(-z)
/// (proportionality of canonical forms, checked exactly).
inline void verify_k3_identities(const Rational& alpha) {
    {
        std::array<Poly, 3> fs{laguerre_neg(1, alpha - 3), laguerre_neg(2, alpha - 3),
                               laguerre_neg(3, alpha - 3)};
        Poly w = wronskian(std::span<const Poly>(fs.data(), 3));
        if (w.normalized() != laguerre(3, -alpha - 1).normalized())
            throw IdentityViolation("k=3 type I Wronskian does not collapse, residual " +
                                    (w.normalized() - laguerre(3, -alpha - 1).normalized()).str());
    }
    {
        std::array<Poly, 3> fs{laguerre(1, -alpha - 3), laguerre(2, -alpha - 3),
                               laguerre(3, -alpha - 3)};
        Poly w = wronskian(std::span<const Poly>(fs.data(), 3));
        if (w.normalized() != laguerre_neg(3, alpha - 1).normalized())
            throw IdentityViolation("k=3 type II Wronskian does not collapse, residual " +
                                    (w.normalized() - laguerre_neg(3, alpha - 1).normalized()).str());
    }
}

} // namespace xlag

#endif
