// Acceptance suite: one line per criterion, [PASS] or [FAIL], exit code is
// the number of failures. Criteria are independent; a throw inside one
// criterion fails that criterion only.

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "xlag/quadrature.hpp"
#include "xlag/verify.hpp"

using namespace xlag;

namespace {

const Rational w1 = 1;

struct Criterion {
    int id;
    const char* title;
    std::function<std::string()> run;  // returns detail; throws on failure
};

// 1. mixed cubic closed form, exact equality
std::string c1() {
    for (int l : {1, 2, 3})
        for (Rational w : {Rational(1), Rational(2)})
            if (!golden_check(GoldenForm::CubicMixed, l, w))
                throw IdentityViolation("mixed cubic mismatch at l=" + std::to_string(l));
    return "exact equality, l in {1,2,3}, omega in {1,2}";
}

// 2. one-seed cubic closed forms, exact equality against the reference table
std::string c2() {
    for (int l : {1, 2, 3})
        for (Rational w : {Rational(1), Rational(2)})
            if (!golden_check(GoldenForm::CubicTypeI, l, w))
                throw IdentityViolation("type I cubic mismatch at l=" + std::to_string(l));
    for (int l : {3, 4, 5})
        for (Rational w : {Rational(1), Rational(2)})
            if (!golden_check(GoldenForm::CubicTypeII, l, w))
                throw IdentityViolation(
                    "type II cubic table mismatch at l=" + std::to_string(l) +
                    ": its x^4 coefficient in N2 reads (2l-9); the construction "
                    "requires (2l-7), all other coefficients agree "
                    "(variant with (2l-7) passes at every l, omega tested)");
    return "exact equality for both one-seed cubic tables";
}

// 3. spectrum of the mixed cubic extension, both constant conventions
std::string c3() {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    SolverConfig cfg;
    double worst = 0.0;
    {
        SpectrumReport rep = eig_solve(potential_V2(ext), cfg);
        const double expect[] = {4, 6, 8, 10, 12};
        for (int nu = 0; nu < 5; ++nu) {
            if (to_double(spectrum_energy(ext, nu, SpectrumConvention::Construction)) != expect[nu])
                throw IdentityViolation("formula value differs from the frozen spectrum");
            worst = std::max(worst, std::abs(rep.eigenvalues[nu] - expect[nu]) / expect[nu]);
        }
    }
    {
        SpectrumReport rep = eig_solve(potential_V2(ext, /*drop_constant=*/true), cfg);
        const double expect[] = {2.5, 4.5, 6.5, 8.5, 10.5};
        for (int nu = 0; nu < 5; ++nu) {
            if (to_double(spectrum_energy(ext, nu, SpectrumConvention::ConstantDropped)) !=
                expect[nu])
                throw IdentityViolation("formula value differs from the frozen spectrum");
            worst = std::max(worst, std::abs(rep.eigenvalues[nu] - expect[nu]) / expect[nu]);
        }
    }
    if (worst > 1e-6) throw ConvergenceFailure("relative error " + std::to_string(worst));
    std::ostringstream os;
    os << "max relative error " << std::scientific << worst << " (tolerance 1e-6)";
    return os.str();
}

// 4. isospectrality of V1 and V2, one admissible instance per case
std::string c4() {
    SolverConfig cfg;
    double worst = 0.0;
    for (ExtensionSpec spec : {ExtensionSpec{Case::I, 2, 1, 3, w1},
                               ExtensionSpec{Case::II, 1, 0, 2, w1},
                               ExtensionSpec{Case::III, 1, 1, 1, w1}}) {
        ExtendedPotential ext = build_extension(spec);
        SpectrumReport e1 = eig_solve(potential_V1(ext), cfg);
        SpectrumReport e2 = eig_solve(potential_V2(ext), cfg);
        for (int nu = 0; nu < cfg.n_eigen; ++nu) {
            double exact = to_double(spectrum_energy(ext, nu, SpectrumConvention::Construction));
            worst = std::max(worst, std::abs(e1.eigenvalues[nu] - exact) / std::abs(exact));
            worst = std::max(worst, std::abs(e2.eigenvalues[nu] - exact) / std::abs(exact));
        }
    }
    if (worst > 1e-6) throw ConvergenceFailure("relative error " + std::to_string(worst));
    std::ostringstream os;
    os << "first 5 levels of all three cases, max relative error " << std::scientific << worst;
    return os.str();
}

// 5. exact polynomial solutions of the defining equation, nu <= 10
std::string c5() {
    int count = 0;
    for (Rational a : {rat(3, 2), rat(5, 2), rat(7, 2)}) {
        int l = static_cast<int>(to_double(a - rat(1, 2)));
        std::vector<ExtensionSpec> specs;
        specs.push_back({Case::III, l, 1, 1, w1});
        if (l >= 2) specs.push_back({Case::I, l, 1, 3, w1});
        specs.push_back({Case::II, l, 0, 2, w1});
        for (const auto& spec : specs) {
            ExtensionSpec s = spec;
            try {
                s.validate();
            } catch (const ConstraintViolation&) {
                continue;
            }
            EopFamily fam = EopFamily::from_extension(build_extension(s));
            for (int nu = 0; nu <= 10; ++nu) {
                EopPolynomial sol = eop_solve(fam, fam.mu + nu);
                if (!eop_operator(fam, sol.y, sol.n).is_zero())
                    throw IdentityViolation("nonzero residual");
                ++count;
            }
        }
    }
    return std::to_string(count) + " unique monic solutions, residuals identically zero";
}

// 6. orthogonality of the family + classical control norms
std::string c6() {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    EopFamily fam = EopFamily::from_extension(ext);
    std::vector<Poly> ys;
    for (int nu = 0; nu <= 6; ++nu) ys.push_back(eop_solve(fam, fam.mu + nu).y);
    std::vector<double> norms;
    for (const Poly& y : ys) norms.push_back(orthogonality_integral(fam, y, y, 80));
    double worst_off = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            double off = orthogonality_integral(fam, ys[i], ys[j], 80);
            worst_off = std::max(worst_off, std::abs(off) / std::sqrt(norms[i] * norms[j]));
        }
    if (worst_off > 1e-8)
        throw QuadratureNonConvergence("off-diagonal " + std::to_string(worst_off));

    double worst_norm = 0.0;
    EopFamily ctrl = EopFamily::classical(rat(5, 2));
    for (int n = 0; n <= 6; ++n) {
        Poly Ln = laguerre(static_cast<unsigned>(n), ctrl.alpha);
        double got = eop_inner_product(ctrl, Ln, Ln, 64);
        double want = laguerre_norm(n, 2.5);
        worst_norm = std::max(worst_norm, std::abs(got - want) / want);
    }
    if (worst_norm > 1e-10)
        throw QuadratureNonConvergence("control norm error " + std::to_string(worst_norm));
    std::ostringstream os;
    os << "worst off-diagonal " << std::scientific << worst_off << ", control norm error "
       << worst_norm;
    return os.str();
}

// 7. reduction catalogue (a)-(e) plus distinctness
std::string c7() {
    for (Rational a : checks::default_alpha_set()) {
        for (Reduction r :
             {Reduction::A, Reduction::B, Reduction::C, Reduction::D, Reduction::E})
            reduction_check(r, a);
        distinctness_check(a);
    }
    return "all five identities and distinctness, exact, 4 alpha values";
}

// 8. closure identity and alternative eigenvalue forms, m1+m2 <= 8
std::string c8() {
    int closures = 0, alts = 0;
    for (Rational a : checks::default_alpha_set()) {
        for (int m1 = 0; m1 <= 7; ++m1) {
            for (int m2 = m1 + 1; m1 + m2 <= 8; ++m2) {
                for (FamilyLabel lab : {FamilyLabel::II_type, FamilyLabel::IIII_type}) {
                    Case c = lab == FamilyLabel::II_type ? Case::I : Case::II;
                    Poly g = g_raw(c, a, m1, m2);
                    EopFamily fam{a, g.normalized(), mu_of(c, m1, m2), lab, m1, m2};
                    gbar_build(fam);  // throws on closure failure
                    ++closures;
                    for (int nu = 0; nu <= 2; ++nu) {
                        alt_ode_check(fam, eop_solve(fam, fam.mu + nu));
                        ++alts;
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << closures << " closure identities and " << alts
       << " alternative eigenvalue forms, all exact";
    return os.str();
}

// 9. second-order chain consistency, one instance per case
std::string c9() {
    for (ExtensionSpec spec : {ExtensionSpec{Case::I, 2, 0, 1, w1},
                               ExtensionSpec{Case::II, 1, 0, 2, w1},
                               ExtensionSpec{Case::III, 1, 1, 1, w1}}) {
        ExtendedPotential ext = build_extension(spec);
        // both closed forms of p agree (p_from_seeds throws otherwise),
        // V2 - V1 = 4 p' and the reconstruction matches up to constants
        SsusyCheckResult r = verify_ssusy(ext);
        if (r.shift1 != 0 || r.shift2 != 0)
            throw IdentityViolation("unexpected additive constants (" + to_string(r.shift1) +
                                    ", " + to_string(r.shift2) + ")");
    }
    return "two-form equality, 4p' relation, and reconstruction match; shifts are zero";
}

// 10. three-seed Wronskian collapses
std::string c10() {
    for (Rational a : {rat(3, 2), rat(5, 2), rat(7, 2)}) verify_k3_identities(a);
    return "both collapses exact for 3 alpha values";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "mixed cubic closed form", c1},
        {2, "one-seed cubic closed forms", c2},
        {3, "mixed cubic spectrum (both constant conventions)", c3},
        {4, "isospectrality of partner potentials", c4},
        {5, "exact polynomial eigenfunctions, nu <= 10", c5},
        {6, "orthogonality and classical control norms", c6},
        {7, "reduction catalogue and distinctness", c7},
        {8, "closure identity and alternative eigenvalue forms", c8},
        {9, "second-order chain consistency", c9},
        {10, "three-seed Wronskian collapses", c10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << " (" << c.title
                  << "): " << detail << "\n";
        if (!ok) ++failures;
    }
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return failures;
}
