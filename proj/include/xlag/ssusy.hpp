#ifndef XLAG_SSUSY_HPP
#define XLAG_SSUSY_HPP

#include "xlag/qrf.hpp"

namespace xlag {

/// p(x) = -W'(phi1,phi2) / (2 W(phi1,phi2)) where W is the x-Wronskian.
/// Also verifies the second closed form p = -(E1-E2) phi1 phi2 / (2W) and
/// refuses to return a p the two forms disagree on.
inline QRF p_from_seeds(const QRF& phi1, const QRF& phi2,
                        const Rational& E1, const Rational& E2) {
    QRF w = phi1 * phi2.derivative() - phi1.derivative() * phi2;
    if (w.is_zero()) throw DegenerateWronskian("seed Wronskian vanishes identically");
    QRF p = Rational(-1, 2) * (w.derivative() / w);
    QRF p_alt = (Rational(-1, 2) * (E1 - E2)) * ((phi1 * phi2) / w);
    if (!(p == p_alt))
        throw IdentityViolation("the two closed forms of p(x) disagree");
    return p;
}

struct SsusyTriple {
    QRF p;
    QRF q;
    QRF V1;   // from the second-order intertwining relations
    QRF V2;
    Rational c;
};

/// Builds q(x) and V^(1,2)(x) from p and c via
///   q       = -p' + p^2 - p''/(2p) + (p'/2p)^2 - c^2/(16 p^2)
///   V^(1,2) = -/+ 2p' + p^2 + p''/(2p) - (p'/2p)^2 + c^2/(16 p^2).
inline SsusyTriple ssusy_reconstruct(const QRF& p, const Rational& c) {
    if (p.is_zero()) throw DegenerateSeed("ssusy reconstruction with p = 0");
    const Rational w = p.omega();
    QRF dp = p.derivative();
    QRF ddp = dp.derivative();
    QRF p2 = p * p;
    QRF half_dd = ddp / (Rational(2) * p);
    QRF half_d = dp / (Rational(2) * p);
    QRF half_d2 = half_d * half_d;
    QRF cterm = QRF::constant(c * c / 16, w) / p2;
    QRF common = p2 + half_dd - half_d2 + cterm;
    QRF q = -dp + p2 - half_dd + half_d2 - cterm;
    QRF V1 = Rational(-2) * dp + common;
    QRF V2 = Rational(2) * dp + common;
    return {p, q, V1, V2, c};
}

struct SsusyCheckResult {
    Rational shift1;  // V1_reconstructed - V1_expected (a pure constant)
    Rational shift2;  // V2_reconstructed - V2_expected
};

/// Checks the reconstructed potentials against independently built ones.
/// V^(2) - V^(1) = 4p' must hold exactly; each reconstructed potential must
/// differ from its expected counterpart by a constant only.
inline SsusyCheckResult ssusy_check(const QRF& p, const Rational& c,
                                    const QRF& V1_expected, const QRF& V2_expected) {
    SsusyTriple t = ssusy_reconstruct(p, c);
    QRF residual = t.V2 - t.V1 - Rational(4) * p.derivative();
    if (!residual.is_zero())
        throw IdentityViolation("V2 - V1 != 4 p': residual " + residual.rat().str());
    auto c1 = (t.V1 - V1_expected).constant_value();
    if (!c1)
        throw IdentityViolation("reconstructed V1 differs from expected by a non-constant");
    auto c2 = (t.V2 - V2_expected).constant_value();
    if (!c2)
        throw IdentityViolation("reconstructed V2 differs from expected by a non-constant");
    return {*c1, *c2};
}

} // namespace xlag

#endif
