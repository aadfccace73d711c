#ifndef XLAG_EOP_HPP
#define XLAG_EOP_HPP

#include <vector>

#include "xlag/extension.hpp"

namespace xlag {

enum class FamilyLabel { II_type, IIII_type, III_type };  // "I,I", "II,II", "I,II"

inline const char* family_name(FamilyLabel f) {
    switch (f) {
        case FamilyLabel::II_type: return "I,I";
        case FamilyLabel::IIII_type: return "II,II";
        case FamilyLabel::III_type: return "I,II";
    }
    return "?";
}

inline FamilyLabel family_of(Case c) {
    switch (c) {
        case Case::I: return FamilyLabel::II_type;
        case Case::II: return FamilyLabel::IIII_type;
        case Case::III: return FamilyLabel::III_type;
    }
    return FamilyLabel::III_type;
}

/// One family of exceptional orthogonal polynomials: the weight is
/// z^alpha e^{-z} g^{-2} on (0, inf), positive by admissibility.
struct EopFamily {
    Rational alpha;
    Poly g;
    int mu;
    FamilyLabel label;
    int m1{0}, m2{0};

    static EopFamily from_extension(const ExtendedPotential& ext) {
        return {ext.alpha, ext.g, ext.mu, family_of(ext.spec.kase), ext.spec.m1, ext.spec.m2};
    }
    /// The classical-Laguerre control family (g = 1, mu = 0).
    static EopFamily classical(const Rational& alpha) {
        return {alpha, Poly::constant(Rational(1)), 0, FamilyLabel::II_type, 0, 1};
    }
};

struct EopPolynomial {
    int n;   // degree, n = mu + nu
    int nu;
    Poly y;  // monic
};

/// The defining second-order operator, cleared of its g denominator:
///   T(y) = g [z y'' + (alpha+1-z) y'] - 2 z g' y'
///          + [(z-alpha) g' + z g''] y - (mu-n) g y.
/// Polynomial solutions of T(y) = 0 of degree n are the family members.
inline Poly eop_operator(const EopFamily& fam, const Poly& y, int n) {
    const Poly z = Poly::identity();
    const Poly& g = fam.g;
    Poly dg = g.derivative();
    Poly ddg = dg.derivative();
    Poly dy = y.derivative();
    Poly ddy = dy.derivative();
    return g * (z * ddy + (Poly::constant(fam.alpha + 1) - z) * dy)
         - Rational(2) * z * dg * dy
         + ((z - Poly::constant(fam.alpha)) * dg + z * ddg) * y
         - Rational(fam.mu - n) * g * y;
}

namespace detail {

/// Exact null space of an r x c rational matrix (row-major), by Gaussian
/// elimination. Returns a basis of the kernel.
inline std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> M,
                                                     std::size_t cols) {
    std::size_t rows = M.size();
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[rank]);
        Rational inv = Rational(1) / M[rank][col];
        for (std::size_t j = col; j < cols; ++j) M[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Rational f = M[i][col];
            for (std::size_t j = col; j < cols; ++j) M[i][j] -= f * M[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<Rational> v(cols);
        v[freec] = 1;
        for (std::size_t col = 0; col < cols; ++col) {
            long pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -M[static_cast<std::size_t>(pr)][freec];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<Rational>> eop_kernel(const EopFamily& fam, int n) {
    std::size_t cols = static_cast<std::size_t>(n) + 1;
    std::size_t rows = static_cast<std::size_t>(fam.mu + n) + 2;
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
        Poly img = eop_operator(fam, Poly::monomial(static_cast<unsigned>(j)), n);
        for (std::size_t i = 0; i < rows; ++i) M[i][j] = img.coeff(static_cast<unsigned>(i));
    }
    return null_space(std::move(M), cols);
}

} // namespace detail

/// Diagnostic only: dimension of the polynomial solution space of the
/// defining equation at degree bound n (nothing asserted for n < mu).
inline std::size_t kernel_dimension(const EopFamily& fam, int n) {
    return detail::eop_kernel(fam, n).size();
}

/// Solves the defining equation exactly in coefficient space and returns
/// the unique monic degree-n solution, n = mu + nu.
inline EopPolynomial eop_solve(const EopFamily& fam, int n) {
    if (n < fam.mu)
        throw ConstraintViolation("eop_solve requires n >= mu");
    auto basis = detail::eop_kernel(fam, n);
    if (basis.empty())
        throw NoPolynomialSolution("no polynomial solution of degree <= n");
    if (basis.size() > 1)
        throw AmbiguousSolution("kernel dimension " + std::to_string(basis.size()));
    Poly y{std::vector<Rational>(basis[0].begin(), basis[0].end())};
    if (y.degree() != n)
        throw NoPolynomialSolution("kernel element has degree below n");
    return {n, n - fam.mu, y.monic()};
}

/// gbar = W(d/dz f1, d/dz f2) built from the same f's as g; only defined
/// for the two pure cases. Asserts the closure identity
///   z g'' = 2z gbar - (alpha+z) g' + mu g   (type I,I)
///   z g'' = 2z gbar + (alpha+z) g' - mu g   (type II,II)
/// on the raw (same-scale) g, then returns gbar rescaled to the family's g.
inline Poly gbar_build(const EopFamily& fam) {
    if (fam.label == FamilyLabel::III_type)
        throw ConstraintViolation("gbar is defined for the pure cases only");
    bool type1 = fam.label == FamilyLabel::II_type;
    unsigned m1 = static_cast<unsigned>(fam.m1), m2 = static_cast<unsigned>(fam.m2);
    Poly f1 = type1 ? laguerre_neg(m1, fam.alpha - 2) : laguerre(m1, -fam.alpha - 2);
    Poly f2 = type1 ? laguerre_neg(m2, fam.alpha - 2) : laguerre(m2, -fam.alpha - 2);
    Poly g = wronskian(f1, f2);
    Poly gbar = wronskian(f1.derivative(), f2.derivative());
    const Poly z = Poly::identity();
    Poly rhs = Rational(2) * z * gbar;
    Poly az = z + Poly::constant(fam.alpha);
    Poly mg = Rational(fam.mu) * g;
    rhs = type1 ? rhs - az * g.derivative() + mg : rhs + az * g.derivative() - mg;
    Poly residual = z * g.derivative().derivative() - rhs;
    if (!residual.is_zero())
        throw IdentityViolation("gbar closure identity fails, residual " + residual.str());
    // rescale to the (normalized) g stored in the family
    if (g.is_zero()) return gbar;  // (0, 1) pair: g const, gbar = 0
    Rational scale = fam.g.leading() / g.leading();
    if (fam.g.degree() != g.degree())
        throw IdentityViolation("family g is not proportional to the raw Wronskian");
    return scale * gbar;
}

/// Alternative eigenvalue forms of the defining equation (pure cases),
/// checked exactly after clearing g:
///   type I,I :  g[z y'' + (a+1-z) y'] - 2z g' y' - 2a g' y + 2z gbar y = -n g y
///   type II,II: g[z y'' + (a+1-z) y'] - 2z g' y' + 2z (g'+gbar) y = (2mu-n) g y
inline void alt_ode_check(const EopFamily& fam, const EopPolynomial& sol) {
    Poly gbar = gbar_build(fam);
    const Poly z = Poly::identity();
    const Poly& g = fam.g;
    const Poly& y = sol.y;
    Poly dg = g.derivative();
    Poly dy = y.derivative();
    Poly base = g * (z * dy.derivative() + (Poly::constant(fam.alpha + 1) - z) * dy)
              - Rational(2) * z * dg * dy;
    Poly residual;
    if (fam.label == FamilyLabel::II_type) {
        residual = base - Rational(2) * fam.alpha * dg * y + Rational(2) * z * gbar * y
                 + Rational(sol.n) * g * y;
    } else if (fam.label == FamilyLabel::IIII_type) {
        residual = base + Rational(2) * z * (dg + gbar) * y
                 - Rational(2 * fam.mu - sol.n) * g * y;
    } else {
        throw ConstraintViolation("alternative form exists for the pure cases only");
    }
    if (!residual.is_zero())
        throw IdentityViolation("alternative eigenvalue form fails, residual " + residual.str());
}

/// Reduction catalogue: each identity is an exact proportionality of
/// canonical polynomials.
enum class Reduction { A, B, C, D, E };

inline void reduction_check(Reduction id, const Rational& alpha) {
    auto expect = [](const Poly& a, const Poly& b, const char* what) {
        if (a.normalized() != b.normalized())
            throw IdentityViolation(std::string("reduction fails: ") + what);
    };
    switch (id) {
        case Reduction::A: {
            // (0,1) families reduce to classical Laguerre polynomials
            for (int n = 0; n <= 6; ++n) {
                for (Case c : {Case::I, Case::II}) {
                    EopFamily fam{alpha, g_raw(c, alpha, 0, 1).normalized(), 0, family_of(c), 0, 1};
                    EopPolynomial sol = eop_solve(fam, n);
                    expect(sol.y, laguerre(static_cast<unsigned>(n), alpha),
                           "(0,1) family is not classical Laguerre");
                }
            }
            break;
        }
        case Reduction::B: {
            for (int m = 1; m <= 4; ++m) {
                expect(g_raw(Case::I, alpha, 0, m + 1),
                       laguerre_neg(static_cast<unsigned>(m), alpha - 1),
                       "case (i) (0, m+1) g");
                expect(g_raw(Case::II, alpha, 0, m + 1),
                       laguerre(static_cast<unsigned>(m), -alpha - 1),
                       "case (ii) (0, m+1) g");
            }
            break;
        }
        case Reduction::C: {
            expect(g_raw(Case::I, alpha, 1, 2), laguerre(2, -alpha - 1), "case (i) (1,2) g");
            expect(g_raw(Case::II, alpha, 1, 2), laguerre_neg(2, alpha - 1), "case (ii) (1,2) g");
            break;
        }
        case Reduction::D: {
            for (int m = 1; m <= 4; ++m) {
                expect(g_raw(Case::III, alpha, m, 0),
                       laguerre_neg(static_cast<unsigned>(m) + 1, alpha - 1),
                       "case (iii) (m,0) g");
                expect(g_raw(Case::III, alpha, 0, m),
                       laguerre(static_cast<unsigned>(m) + 1, -alpha - 1),
                       "case (iii) (0,m) g");
            }
            break;
        }
        case Reduction::E: {
            Poly cubic = g_raw(Case::III, alpha, 1, 1);
            expect(g_raw(Case::I, alpha, 1, 3), cubic, "case (i) (1,3) g vs mixed cubic");
            expect(g_raw(Case::II, alpha, 1, 3), cubic, "case (ii) (1,3) g vs mixed cubic");
            break;
        }
    }
}

/// The mixed cubic is genuinely new: proportional to neither one-seed cubic.
inline void distinctness_check(const Rational& alpha) {
    Poly cubic = g_raw(Case::III, alpha, 1, 1).normalized();
    if (cubic == laguerre_neg(3, alpha - 1).normalized() ||
        cubic == laguerre(3, -alpha - 1).normalized())
        throw IdentityViolation("mixed cubic coincides with a one-seed cubic");
}

} // namespace xlag

#endif
