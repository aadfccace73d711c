// Command-line surface: construct rationally-extended radial oscillator
// potentials, emit spectra and polynomial data, run the verification and
// closed-form suites, and export potential/wavefunction samples.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "xlag/json_io.hpp"
#include "xlag/verify.hpp"

namespace {

using namespace xlag;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::vector<Rational> parse_alpha_set(const std::string& csv) {
    if (csv.empty()) return checks::default_alpha_set();
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int cmd_construct(const std::string& case_str, int l, int m1, int m2,
                  const std::string& omega_str, const std::string& out_path) {
    ExtensionSpec spec{case_from_name(case_str), l, m1, m2, rat_parse(omega_str)};
    ExtendedPotential ext = build_extension(spec);
    std::cout << "case " << case_name(spec.kase) << ", l=" << l << ", m1=" << m1
              << ", m2=" << m2 << ", omega=" << to_string(spec.omega) << "\n"
              << "  mu = " << ext.mu << ", C = " << to_string(ext.C)
              << ", E1 = " << to_string(ext.E1) << ", E2 = " << to_string(ext.E2) << "\n"
              << "  g(z) = " << ext.g.str() << "\n"
              << "  admissible: yes (no zeros on the positive half-line)\n";
    if (ext.mu == 0)
        std::cout << "  note: g is constant; the extension is a pure radial oscillator\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << descriptor_to_json(ext).dump(2) << "\n";
        std::cout << "  descriptor written to " << out_path << "\n";
    }
    return kExitPass;
}

int cmd_spectrum(const std::string& pot_path, int levels, bool numeric,
                 const std::string& conv_str) {
    auto [ext, file_conv] = descriptor_from_json(load_json(pot_path));
    SpectrumConvention conv = conv_str.empty() ? file_conv : convention_from_name(conv_str);
    Potential V = potential_V2(ext, conv == SpectrumConvention::ConstantDropped);
    SolverConfig cfg;
    cfg.n_eigen = levels;
    std::vector<double> numeric_vals;
    if (numeric) numeric_vals = eig_solve(V, cfg).eigenvalues;
    std::cout << "nu  E(formula)";
    if (numeric) std::cout << "          E(numeric)            rel.err";
    std::cout << "\n";
    double worst = 0.0;
    for (int nu = 0; nu < levels; ++nu) {
        Rational e = spectrum_energy(ext, static_cast<unsigned>(nu), conv);
        std::cout << std::left << std::setw(4) << nu << std::setw(12) << to_string(e);
        if (numeric) {
            double rel = std::abs(numeric_vals[nu] - to_double(e)) / std::abs(to_double(e));
            worst = std::max(worst, rel);
            std::cout << std::setprecision(12) << std::setw(22) << numeric_vals[nu]
                      << std::scientific << std::setprecision(2) << rel
                      << std::defaultfloat;
        }
        std::cout << "\n";
    }
    if (numeric)
        std::cout << "max relative error: " << std::scientific << std::setprecision(2)
                  << worst << "\n";
    return kExitPass;
}

int cmd_eop(const std::string& pot_path, int nu_max, const std::string& out_path) {
    auto [ext, conv] = descriptor_from_json(load_json(pot_path));
    (void)conv;
    EopFamily fam = EopFamily::from_extension(ext);
    json out = json::array();
    for (int nu = 0; nu <= nu_max; ++nu) {
        EopPolynomial sol = eop_solve(fam, fam.mu + nu);
        out.push_back(eop_to_json(fam, sol));
        std::cout << "n=" << sol.n << " (nu=" << sol.nu << "): y = " << sol.y.str() << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write " + out_path);
        f << out.dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_verify(bool all, const std::vector<std::string>& ids, const std::string& alpha_csv,
               const std::string& report_path) {
    std::vector<std::string> selection = all ? std::vector<std::string>{} : ids;
    if (!all && selection.empty())
        throw ConstraintViolation("select checks with --check or pass --all");
    VerificationReport rep = run_checks(selection, parse_alpha_set(alpha_csv));
    json jrep = json::array();
    for (const auto& e : rep.entries) {
        std::cout << (e.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(22)
                  << e.check_id << " " << e.detail << "\n";
        jrep.push_back({{"check_id", e.check_id},
                        {"status", e.passed ? "pass" : "fail"},
                        {"residual", e.detail}});
    }
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw Error("cannot write " + report_path);
        f << jrep.dump(2) << "\n";
    }
    return rep.all_passed() ? kExitPass : kExitVerifyFail;
}

int cmd_golden() {
    struct Row {
        GoldenForm form;
        const char* name;
        std::vector<int> ls;
    };
    const std::vector<Row> rows = {
        {GoldenForm::CubicMixed, "mixed cubic", {1, 2, 3}},
        {GoldenForm::CubicTypeI, "type I cubic", {1, 2, 3}},
        {GoldenForm::CubicTypeII, "type II cubic", {3, 4, 5}},
    };
    int failures = 0;
    for (const auto& row : rows) {
        for (int l : row.ls) {
            for (Rational w : {Rational(1), Rational(2)}) {
                bool ok = golden_check(row.form, l, w);
                std::cout << (ok ? "[PASS] " : "[FAIL] ") << row.name << " l=" << l
                          << " omega=" << to_string(w) << "\n";
                if (!ok) ++failures;
            }
        }
    }
    return failures == 0 ? kExitPass : kExitVerifyFail;
}

int cmd_sample(const std::string& pot_path, double x_max, int points,
               const std::string& nus_csv, const std::string& csv_path) {
    if (points <= 0) throw ConstraintViolation("points must be positive");
    auto [ext, conv] = descriptor_from_json(load_json(pot_path));
    Potential V = potential_V2(ext, conv == SpectrumConvention::ConstantDropped);
    EopFamily fam = EopFamily::from_extension(ext);
    std::vector<int> nus;
    if (!nus_csv.empty()) {
        std::stringstream ss(nus_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) nus.push_back(std::stoi(tok));
    }
    std::vector<std::pair<int, Poly>> ys;
    for (int nu : nus) ys.emplace_back(nu, eop_solve(fam, fam.mu + nu).y);

    std::ofstream out(csv_path);
    if (!out) throw Error("cannot write " + csv_path);
    out << "x,V";
    for (int nu : nus) out << ",psi_" << nu;
    out << "\n" << std::setprecision(17);
    double h = x_max / points;
    for (int i = 1; i <= points; ++i) {
        double x = i * h;
        double xs[1] = {x};
        out << x << "," << sample_potential(V, xs)[0];
        for (const auto& [nu, y] : ys) out << "," << wavefunction(fam, y, ext.spec.omega, x);
        out << "\n";
    }
    std::cout << "wrote " << points << " rows to " << csv_path << "\n";
    return kExitPass;
}

int cmd_explore_mu4(const std::string& alpha_str) {
    Rational alpha = rat_parse(alpha_str);
    std::cout << "candidate quartic denominators at alpha = " << to_string(alpha) << "\n";
    struct Cand {
        Case kase;
        int m1, m2;
    };
    std::vector<Cand> cands;
    for (int m1 = 0; m1 <= 5; ++m1)
        for (int m2 = m1 + 1; m2 <= 5; ++m2)
            if (m1 + m2 == 5) cands.push_back({Case::I, m1, m2}), cands.push_back({Case::II, m1, m2});
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
            if (m1 + m2 == 3) cands.push_back({Case::III, m1, m2});
    std::vector<Poly> admissible;
    for (const auto& c : cands) {
        Poly g = g_raw(c.kase, alpha, c.m1, c.m2);
        if (g.is_zero() || g.degree() != 4) continue;
        Poly gn = g.normalized();
        bool adm = count_positive_roots(gn) == 0;
        bool fresh = true;
        for (const auto& seen : admissible)
            if (seen == gn) fresh = false;
        std::cout << "  case " << case_name(c.kase) << " (m1,m2)=(" << c.m1 << "," << c.m2
                  << "): g = " << gn.str() << (adm ? "  [admissible" : "  [inadmissible")
                  << (adm && fresh ? ", new]" : adm ? ", duplicate]" : "]") << "\n";
        if (adm && fresh) admissible.push_back(gn);
    }
    std::cout << "distinct admissible quartics found: " << admissible.size() << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rationally-extended radial oscillators and Laguerre-type "
                 "exceptional orthogonal polynomials"};
    app.require_subcommand(1);

    // construct
    std::string case_str, omega_str = "1", out_path;
    int l = 0, m1 = 0, m2 = 0;
    auto* construct = app.add_subcommand("construct", "build an extended potential descriptor");
    construct->add_option("--case", case_str, "i, ii, or iii")->required();
    construct->add_option("--l", l)->required();
    construct->add_option("--m1", m1)->required();
    construct->add_option("--m2", m2)->required();
    construct->add_option("--omega", omega_str, "positive rational, e.g. 1 or 3/2");
    construct->add_option("--out", out_path, "descriptor JSON path");

    // spectrum
    std::string pot_path, conv_str;
    int levels = 5;
    bool numeric = false;
    auto* spectrum = app.add_subcommand("spectrum", "print bound-state energies");
    spectrum->add_option("potential", pot_path, "descriptor JSON")->required();
    spectrum->add_option("--levels", levels);
    spectrum->add_flag("--numeric", numeric, "also solve the eigenproblem numerically");
    spectrum->add_option("--convention", conv_str, "construction | constant-dropped");

    // eop
    int nu_max = 3;
    std::string eop_out;
    auto* eop = app.add_subcommand("eop", "emit exceptional polynomial coefficients");
    eop->add_option("potential", pot_path, "descriptor JSON")->required();
    eop->add_option("--nu-max", nu_max);
    eop->add_option("--out", eop_out, "JSON output path");

    // verify
    bool verify_all = false;
    std::vector<std::string> check_ids;
    std::string alpha_csv, report_path;
    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_flag("--all", verify_all);
    verify->add_option("--check", check_ids, "check id (repeatable)");
    verify->add_option("--alpha-set", alpha_csv, "comma-separated rationals, e.g. 3/2,5/2");
    verify->add_option("--out", report_path, "report JSON path");

    // golden
    auto* golden = app.add_subcommand("golden", "check the cubic closed-form tables");

    // sample
    double x_max = 10.0;
    int points = 1000;
    std::string nus_csv, csv_path;
    auto* sample = app.add_subcommand("sample", "export potential and wavefunction samples");
    sample->add_option("potential", pot_path, "descriptor JSON")->required();
    sample->add_option("--x-max", x_max);
    sample->add_option("--points", points);
    sample->add_option("--nus", nus_csv, "comma-separated wavefunction indices");
    sample->add_option("--out", csv_path, "CSV output path")->required();

    // explore-mu4
    std::string alpha_str = "3/2";
    auto* explore = app.add_subcommand("explore-mu4", "enumerate candidate quartic denominators");
    explore->add_option("--alpha", alpha_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; every other parse problem is a usage error
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(case_str, l, m1, m2, omega_str, out_path);
        if (spectrum->parsed()) return cmd_spectrum(pot_path, levels, numeric, conv_str);
        if (eop->parsed()) return cmd_eop(pot_path, nu_max, eop_out);
        if (verify->parsed()) return cmd_verify(verify_all, check_ids, alpha_csv, report_path);
        if (golden->parsed()) return cmd_golden();
        if (sample->parsed()) return cmd_sample(pot_path, x_max, points, nus_csv, csv_path);
        if (explore->parsed()) return cmd_explore_mu4(alpha_str);
    } catch (const ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
