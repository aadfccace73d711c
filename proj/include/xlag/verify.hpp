#ifndef XLAG_VERIFY_HPP
#define XLAG_VERIFY_HPP

#include <functional>
#include <map>
#include <sstream>

#include "xlag/golden.hpp"
#include "xlag/quadrature.hpp"
#include "xlag/schrodinger.hpp"

namespace xlag {

struct CheckEntry {
    std::string check_id;
    bool passed;
    std::string detail;  // exact residual text or numeric error
};

struct VerificationReport {
    std::vector<CheckEntry> entries;
    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

namespace checks {

inline std::vector<Rational> default_alpha_set() {
    return {Rational(3, 2), Rational(5, 2), Rational(7, 2), Rational(9, 2)};
}

inline int l_of_alpha(const Rational& alpha) {
    Rational l = alpha - Rational(1, 2);
    if (!is_integer(l) || l < 0) throw ConstraintViolation("alpha must be l + 1/2, l >= 0");
    return static_cast<int>(numerator(l).convert_to<long>());
}

/// Representative admissible instances, one per case.
inline std::vector<ExtensionSpec> representative_specs() {
    return {
        {Case::I, 2, 0, 1, Rational(1)},
        {Case::I, 2, 1, 3, Rational(1)},
        {Case::II, 1, 0, 2, Rational(1)},
        {Case::III, 1, 1, 1, Rational(1)},
    };
}

inline std::string check_seed_eigen(const std::vector<Rational>& alphas) {
    int count = 0;
    for (const auto& alpha : alphas) {
        int l = l_of_alpha(alpha);
        Potential V = Potential::bare(Rational(1), Rational(l));
        for (int m = 0; m <= 3; ++m) {
            Seed s1 = make_seed({SeedKind::TypeI, l, m, Rational(1)});
            if (!is_eigenfunction(V, s1.phi, s1.energy))
                throw IdentityViolation("type I seed is not an exact eigenfunction");
            ++count;
            if (alpha > m) {
                Seed s2 = make_seed({SeedKind::TypeII, l, m, Rational(1)});
                if (!is_eigenfunction(V, s2.phi, s2.energy))
                    throw IdentityViolation("type II seed is not an exact eigenfunction");
                ++count;
            }
        }
    }
    return std::to_string(count) + " seeds verified exactly";
}

inline std::string check_p_two_form() {
    int count = 0;
    for (const auto& spec : representative_specs()) {
        auto [s1, s2] = seeds_for(spec);
        p_from_seeds(s1.phi, s2.phi, s1.energy, s2.energy);  // throws on mismatch
        // order reversal leaves p unchanged
        QRF p = p_from_seeds(s1.phi, s2.phi, s1.energy, s2.energy);
        QRF pr = p_from_seeds(s2.phi, s1.phi, s2.energy, s1.energy);
        if (!(p == pr)) throw IdentityViolation("p changes under seed reversal");
        ++count;
    }
    return std::to_string(count) + " constructions, both closed forms agree";
}

inline std::string check_ssusy() {
    std::ostringstream os;
    for (const auto& spec : representative_specs()) {
        ExtendedPotential ext = build_extension(spec);
        SsusyCheckResult r = verify_ssusy(ext);
        os << case_name(spec.kase) << ": shifts (" << to_string(r.shift1) << ", "
           << to_string(r.shift2) << ") ";
    }
    return os.str();
}

inline std::string check_gbar_closure(const std::vector<Rational>& alphas) {
    int count = 0;
    for (const auto& alpha : alphas) {
        for (int m1 = 0; m1 <= 7; ++m1) {
            for (int m2 = m1 + 1; m1 + m2 <= 8; ++m2) {
                for (FamilyLabel lab : {FamilyLabel::II_type, FamilyLabel::IIII_type}) {
                    Case c = lab == FamilyLabel::II_type ? Case::I : Case::II;
                    Poly g = g_raw(c, alpha, m1, m2);
                    EopFamily fam{alpha, g.normalized(), mu_of(c, m1, m2), lab, m1, m2};
                    gbar_build(fam);  // throws on identity failure
                    ++count;
                }
            }
        }
    }
    return std::to_string(count) + " closure identities hold exactly";
}

inline std::string check_alt_ode(const std::vector<Rational>& alphas) {
    int count = 0;
    for (const auto& alpha : alphas) {
        for (auto [m1, m2] : {std::pair{1, 3}, {0, 4}, {1, 2}, {2, 3}}) {
            for (FamilyLabel lab : {FamilyLabel::II_type, FamilyLabel::IIII_type}) {
                Case c = lab == FamilyLabel::II_type ? Case::I : Case::II;
                Poly g = g_raw(c, alpha, m1, m2).normalized();
                if (count_positive_roots(g) != 0) continue;  // only admissible families
                int mu = mu_of(c, m1, m2);
                EopFamily fam{alpha, g, mu, lab, m1, m2};
                for (int nu = 0; nu <= 3; ++nu) {
                    alt_ode_check(fam, eop_solve(fam, mu + nu));
                    ++count;
                }
            }
        }
    }
    return std::to_string(count) + " alternative eigenvalue forms hold exactly";
}

inline std::string check_reduction(Reduction id, const std::vector<Rational>& alphas) {
    for (const auto& alpha : alphas) reduction_check(id, alpha);
    return std::to_string(alphas.size()) + " alpha values, exact proportionality";
}

inline std::string check_distinctness(const std::vector<Rational>& alphas) {
    for (const auto& alpha : alphas) distinctness_check(alpha);
    return "mixed cubic distinct from both one-seed cubics";
}

inline std::string check_k3(const std::vector<Rational>& alphas) {
    for (const auto& alpha : alphas) verify_k3_identities(alpha);
    return std::to_string(alphas.size()) + " alpha values, both collapses exact";
}

inline std::string check_golden(GoldenForm form) {
    std::vector<int> ls = form == GoldenForm::CubicTypeII || form == GoldenForm::CubicTypeIICorrected
                              ? std::vector<int>{3, 4, 5}
                              : std::vector<int>{1, 2, 3};
    for (int l : ls) {
        for (Rational w : {Rational(1), Rational(2)}) {
            if (!golden_check(form, l, w)) {
                std::ostringstream os;
                os << "closed form mismatch at l=" << l << ", omega=" << to_string(w);
                throw IdentityViolation(os.str());
            }
        }
    }
    return "exact rational-function equality at all (l, omega)";
}

/// Construction spectrum minus constant-dropped spectrum must equal
/// -(E1+E2)/2 + C, exactly.
inline std::string check_spectrum_consistency() {
    for (const auto& spec : representative_specs()) {
        ExtendedPotential ext = build_extension(spec);
        Rational shift = -(ext.E1 + ext.E2) / 2 + ext.C;
        for (unsigned nu = 0; nu <= 4; ++nu) {
            Rational a = spectrum_energy(ext, nu, SpectrumConvention::Construction);
            Rational b = spectrum_energy(ext, nu, SpectrumConvention::ConstantDropped);
            if (a - b != shift)
                throw IdentityViolation("spectrum conventions differ by the wrong constant");
        }
    }
    return "construction and constant-dropped spectra differ by -(E1+E2)/2 + C";
}

inline std::string check_numeric_isospectral() {
    SolverConfig cfg;
    std::ostringstream os;
    for (const auto& spec : representative_specs()) {
        ExtendedPotential ext = build_extension(spec);
        auto e1 = eig_solve(potential_V1(ext), cfg);
        auto e2 = eig_solve(potential_V2(ext), cfg);
        double worst = 0.0;
        for (int nu = 0; nu < cfg.n_eigen; ++nu) {
            double exact = to_double(spectrum_energy(ext, nu, SpectrumConvention::Construction));
            worst = std::max(worst, std::abs(e1.eigenvalues[nu] - exact) / std::abs(exact));
            worst = std::max(worst, std::abs(e2.eigenvalues[nu] - exact) / std::abs(exact));
        }
        if (worst > 1e-6)
            throw ConvergenceFailure("isospectrality error " + std::to_string(worst));
        os << case_name(spec.kase) << ": max rel err " << worst << " ";
    }
    return os.str();
}

inline std::string check_orthogonality() {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, Rational(1)});
    EopFamily fam = EopFamily::from_extension(ext);
    std::vector<Poly> ys;
    for (int nu = 0; nu <= 6; ++nu) ys.push_back(eop_solve(fam, fam.mu + nu).y);
    std::vector<double> norms(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i)
        norms[i] = orthogonality_integral(fam, ys[i], ys[i], 80);
    double worst = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            double off = orthogonality_integral(fam, ys[i], ys[j], 80);
            worst = std::max(worst, std::abs(off) / std::sqrt(norms[i] * norms[j]));
        }
    if (worst > 1e-8) throw QuadratureNonConvergence("off-diagonal " + std::to_string(worst));
    return "Gram matrix diagonal, worst off-diagonal " + std::to_string(worst);
}

} // namespace checks

using CheckFn = std::function<std::string(const std::vector<Rational>&)>;

/// Ordered manifest of named checks. Output order always follows this list.
inline const std::vector<std::pair<std::string, CheckFn>>& check_manifest() {
    using namespace checks;
    static const std::vector<std::pair<std::string, CheckFn>> manifest = {
        {"seed-eigen", [](const auto& a) { return check_seed_eigen(a); }},
        {"p-two-form", [](const auto&) { return check_p_two_form(); }},
        {"ssusy", [](const auto&) { return check_ssusy(); }},
        {"gbar-closure", [](const auto& a) { return check_gbar_closure(a); }},
        {"alt-ode", [](const auto& a) { return check_alt_ode(a); }},
        {"reduction-a", [](const auto& a) { return check_reduction(Reduction::A, a); }},
        {"reduction-b", [](const auto& a) { return check_reduction(Reduction::B, a); }},
        {"reduction-c", [](const auto& a) { return check_reduction(Reduction::C, a); }},
        {"reduction-d", [](const auto& a) { return check_reduction(Reduction::D, a); }},
        {"reduction-e", [](const auto& a) { return check_reduction(Reduction::E, a); }},
        {"distinctness", [](const auto& a) { return check_distinctness(a); }},
        {"k3", [](const auto& a) { return check_k3(a); }},
        {"spectrum-consistency", [](const auto&) { return check_spectrum_consistency(); }},
        {"golden-mixed", [](const auto&) { return check_golden(GoldenForm::CubicMixed); }},
        {"golden-type1", [](const auto&) { return check_golden(GoldenForm::CubicTypeI); }},
        {"golden-type2", [](const auto&) { return check_golden(GoldenForm::CubicTypeII); }},
        {"numeric-isospectral", [](const auto&) { return check_numeric_isospectral(); }},
        {"orthogonality", [](const auto&) { return check_orthogonality(); }},
    };
    return manifest;
}

inline VerificationReport run_checks(const std::vector<std::string>& selection,
                                     const std::vector<Rational>& alphas) {
    VerificationReport rep;
    for (const auto& [id, fn] : check_manifest()) {
        if (!selection.empty() &&
            std::find(selection.begin(), selection.end(), id) == selection.end())
            continue;
        CheckEntry e{id, true, ""};
        try {
            e.detail = fn(alphas);
        } catch (const std::exception& ex) {
            e.passed = false;
            e.detail = ex.what();
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace xlag

#endif
