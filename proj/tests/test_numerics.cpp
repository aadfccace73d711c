#include <doctest.h>

#include <cmath>

#include "xlag/quadrature.hpp"
#include "xlag/schrodinger.hpp"

using namespace xlag;

namespace {
const Rational w1 = 1;
}

TEST_CASE("sample_potential point values") {
    Potential bare = Potential::bare(w1, Rational(1));
    double xs[] = {1.0, 2.0};
    auto vs = sample_potential(bare, xs);
    CHECK(vs[0] == doctest::Approx(0.25 + 2.0).epsilon(1e-14));
    CHECK(vs[1] == doctest::Approx(1.0 + 0.5).epsilon(1e-14));

    // rational part of the mixed cubic at x = 1 is -48/25
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    Potential v2 = potential_V2(ext, /*drop_constant=*/true);
    double x1[] = {1.0};
    CHECK(sample_potential(v2, x1)[0] == doctest::Approx(2.25 - 48.0 / 25.0).epsilon(1e-12));
}

TEST_CASE("sample_potential detects a positive-axis pole") {
    // denominator z - 1 vanishes at x = sqrt(2)
    Poly z = Poly::identity();
    Potential bad{w1, Rational(0),
                  RatFunc(Poly::constant(Rational(1)), z - Poly::constant(Rational(1))),
                  Rational(0)};
    double xs[] = {std::sqrt(2.0)};
    CHECK_THROWS_AS(sample_potential(bad, xs), PoleEncountered);
}

TEST_CASE("solver config validation") {
    SolverConfig cfg;
    cfg.n_points = 10;
    CHECK_THROWS_AS(cfg.validate(), ConstraintViolation);
    cfg = SolverConfig{};
    cfg.x_max = -1;
    CHECK_THROWS_AS(cfg.validate(), ConstraintViolation);
}

TEST_CASE("bare oscillator spectrum to 1e-9 after extrapolation") {
    Potential V = Potential::bare(w1, Rational(1));
    SpectrumReport rep = eig_solve(V, SolverConfig{});
    for (int nu = 0; nu < 5; ++nu)
        CHECK(rep.eigenvalues[nu] == doctest::Approx(2 * nu + 2.5).epsilon(1e-9));
}

TEST_CASE("omega scaling of the numeric spectrum") {
    Potential V = Potential::bare(Rational(2), Rational(0));
    SpectrumReport rep = eig_solve(V, SolverConfig{});
    for (int nu = 0; nu < 5; ++nu)
        CHECK(rep.eigenvalues[nu] == doctest::Approx(2.0 * (2 * nu + 1.5)).epsilon(1e-9));
}

TEST_CASE("extended potentials are isospectral with their partners") {
    SolverConfig cfg;
    for (ExtensionSpec spec : {ExtensionSpec{Case::I, 2, 1, 3, w1},
                               ExtensionSpec{Case::II, 1, 0, 2, w1},
                               ExtensionSpec{Case::III, 1, 1, 1, w1}}) {
        ExtendedPotential ext = build_extension(spec);
        SpectrumReport e1 = eig_solve(potential_V1(ext), cfg);
        SpectrumReport e2 = eig_solve(potential_V2(ext), cfg);
        for (int nu = 0; nu < cfg.n_eigen; ++nu) {
            double exact = to_double(spectrum_energy(ext, nu, SpectrumConvention::Construction));
            CHECK(e1.eigenvalues[nu] == doctest::Approx(exact).epsilon(1e-6));
            CHECK(e2.eigenvalues[nu] == doctest::Approx(exact).epsilon(1e-6));
        }
    }
}

TEST_CASE("nu-th bound state has nu interior nodes") {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    Potential V = potential_V2(ext);
    SolverConfig cfg;
    cfg.n_points = 2000;
    for (int nu = 0; nu <= 3; ++nu)
        CHECK(eigenfunction_sign_changes(V, cfg, nu) == nu);
}

TEST_CASE("gauss-laguerre rule: closed-form two-point case and moment exactness") {
    QuadRule r = gauss_laguerre(2, 0.0);
    CHECK(r.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
    CHECK(r.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
    CHECK(r.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-13));
    CHECK(r.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-13));

    // degree-(2n-1) exactness: moments of z^k e^{-z} are k!
    QuadRule r8 = gauss_laguerre(8, 0.0);
    double fact = 1.0;
    for (int k = 0; k <= 15; ++k) {
        if (k > 0) fact *= k;
        double acc = 0.0;
        for (std::size_t i = 0; i < r8.nodes.size(); ++i)
            acc += r8.weights[i] * std::pow(r8.nodes[i], k);
        CHECK(acc == doctest::Approx(fact).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gauss_laguerre(0, 0.0), ConstraintViolation);
}

TEST_CASE("classical laguerre norms from quadrature") {
    EopFamily fam = EopFamily::classical(rat(5, 2));
    for (int n = 0; n <= 6; ++n) {
        Poly Ln = laguerre(static_cast<unsigned>(n), fam.alpha);
        double got = eop_inner_product(fam, Ln, Ln, 64);
        CHECK(got == doctest::Approx(laguerre_norm(n, 2.5)).epsilon(1e-10));
    }
}

TEST_CASE("eop gram matrix is diagonal") {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    EopFamily fam = EopFamily::from_extension(ext);
    std::vector<Poly> ys;
    for (int nu = 0; nu <= 6; ++nu) ys.push_back(eop_solve(fam, fam.mu + nu).y);
    std::vector<double> norms;
    for (const Poly& y : ys) {
        double nrm = orthogonality_integral(fam, y, y, 80);
        CHECK(nrm > 0);
        norms.push_back(nrm);
    }
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            double off = orthogonality_integral(fam, ys[i], ys[j], 80);
            CHECK(std::abs(off) / std::sqrt(norms[i] * norms[j]) < 1e-8);
        }
}

TEST_CASE("ground-state wavefunction is nodeless") {
    ExtendedPotential ext = build_extension({Case::III, 1, 1, 1, w1});
    EopFamily fam = EopFamily::from_extension(ext);
    Poly y0 = eop_solve(fam, fam.mu).y;
    int sign = 0;
    for (double x = 0.05; x <= 10.0; x += 0.05) {
        double psi = wavefunction(fam, y0, w1, x);
        int s = psi > 0 ? 1 : psi < 0 ? -1 : 0;
        if (sign == 0) sign = s;
        CHECK(s == sign);
    }
}
