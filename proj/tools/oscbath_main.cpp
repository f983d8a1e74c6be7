// oscbath: free energy and entropy of a quantum oscillator in a heat bath.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscbath/asymptotics.hpp"
#include "oscbath/bath_models.hpp"
#include "oscbath/core_types.hpp"
#include "oscbath/thermo_integrals.hpp"
#include "oscbath/wigner_bench.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    std::string bath = "ohmic";
    double gamma = 0.1;
    double omega_cut = 10.0;
    std::string modes;  // "m:w;m:w" pairs for the discrete bath
    double eta = 1e-6;
    double b_field = 0.0;
    std::vector<double> thetas;
    std::string theta_log;  // "lo:hi:n"
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double cutoff_lambda = 50.0;
    int max_subdivisions = 2000;
    std::string format = "csv";
    std::string output;
    double omega = 1.0;  // compare-wigner oscillator frequency
    double theta_max = oscbath::kLowTWindowDefault;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

oscbath::BathSpec make_bath(const Options& o) {
    if (o.bath == "ohmic") return oscbath::OhmicBath{o.gamma};
    if (o.bath == "drude") return oscbath::DrudeBath{o.gamma, o.omega_cut};
    if (o.bath == "discrete") {
        oscbath::DiscreteBath d;
        d.eta_tilde = o.eta;
        std::stringstream ss(o.modes);
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            if (pair.empty()) continue;
            const auto colon = pair.find(':');
            if (colon == std::string::npos)
                throw oscbath::ValidationError("--modes entries must be m:omega pairs");
            try {
                d.modes.push_back({std::stod(pair.substr(0, colon)),
                                   std::stod(pair.substr(colon + 1))});
            } catch (const std::exception&) {
                throw oscbath::ValidationError("--modes entries must be numeric m:omega pairs");
            }
        }
        return d;
    }
    throw oscbath::ValidationError("unknown bath kind: " + o.bath);
}

std::vector<double> make_thetas(const Options& o, const std::string& command) {
    std::vector<double> thetas = o.thetas;
    if (!o.theta_log.empty()) {
        double lo = 0.0, hi = 0.0;
        int n = 0;
        std::stringstream ss(o.theta_log);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != 3)
            throw oscbath::ValidationError("--theta-log must be lo:hi:n");
        try {
            lo = std::stod(parts[0]);
            hi = std::stod(parts[1]);
            n = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw oscbath::ValidationError("--theta-log must be numeric lo:hi:n");
        }
        if (!(lo > 0.0) || !(hi > lo) || n < 1)
            throw oscbath::ValidationError("--theta-log needs 0 < lo < hi and n >= 1");
        for (int i = 0; i < n; ++i)
            thetas.push_back(n == 1 ? lo
                                    : lo * std::pow(hi / lo, double(i) / double(n - 1)));
    }
    if (thetas.empty()) {
        if (command == "third-law-check") thetas = {5e-4, 1e-3, 2e-3, 5e-3};
        else if (command == "compare-wigner") thetas = {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0};
        else throw oscbath::ValidationError("no temperatures given (--theta / --theta-log)");
    }
    std::sort(thetas.begin(), thetas.end());
    for (std::size_t i = 1; i < thetas.size(); ++i)
        if (thetas[i] == thetas[i - 1])
            throw oscbath::ValidationError("duplicate theta values");
    return thetas;
}

oscbath::QuadratureSpec make_quad(const Options& o) {
    oscbath::QuadratureSpec q;
    q.rel_tol = o.rel_tol;
    q.abs_tol = o.abs_tol;
    q.cutoff_lambda = o.cutoff_lambda;
    q.max_subdivisions = o.max_subdivisions;
    q.check();
    return q;
}

json config_echo(const Options& o, const std::string& command) {
    json cfg;
    cfg["command"] = command;
    cfg["bath"] = o.bath;
    cfg["gamma"] = o.gamma;
    if (o.bath == "drude") cfg["omega_cut"] = o.omega_cut;
    if (o.bath == "discrete") {
        cfg["modes"] = o.modes;
        cfg["eta"] = o.eta;
    }
    cfg["b_field"] = o.b_field;
    cfg["rel_tol"] = o.rel_tol;
    cfg["abs_tol"] = o.abs_tol;
    cfg["cutoff_lambda"] = o.cutoff_lambda;
    cfg["max_subdivisions"] = o.max_subdivisions;
    if (command == "compare-wigner") cfg["omega"] = o.omega;
    if (command == "third-law-check") cfg["theta_max"] = o.theta_max;
    return cfg;
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw oscbath::ValidationError("cannot open output file: " + o.output);
    out << text;
}

int run_thermo(const Options& o, const std::string& command) {
    const auto bath = make_bath(o);
    const auto violations = oscbath::validate(bath);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "error: " << v << "\n";
        return 1;
    }
    const oscbath::FieldSpec field(o.b_field);
    const auto thetas = make_thetas(o, command);
    const auto quad = make_quad(o);
    const auto rows = oscbath::sweep(bath, field, thetas, quad);

    std::ostringstream os;
    if (o.format == "csv") {
        os << "theta,F_total,F_zero_field,dF_field,S,est_abs_error,evals\n";
        for (const auto& [th, r] : rows)
            os << fmt17(th) << ',' << fmt17(r.free_energy_total) << ','
               << fmt17(r.free_energy_zero_field) << ','
               << fmt17(r.delta_free_energy_field) << ',' << fmt17(r.entropy) << ','
               << fmt17(r.est_abs_error) << ',' << r.integrand_evals << '\n';
    } else {
        json doc;
        doc["config"] = config_echo(o, command);
        doc["rows"] = json::array();
        long total_evals = 0;
        for (const auto& [th, r] : rows) {
            doc["rows"].push_back({{"theta", th},
                                   {"F_total", r.free_energy_total},
                                   {"F_zero_field", r.free_energy_zero_field},
                                   {"dF_field", r.delta_free_energy_field},
                                   {"S", r.entropy},
                                   {"est_abs_error", r.est_abs_error},
                                   {"evals", r.integrand_evals}});
            total_evals += r.integrand_evals;
        }
        doc["diagnostics"] = {{"points", rows.size()}, {"total_evals", total_evals}};
        os << doc.dump(2) << '\n';
    }
    emit(o, os.str());
    return 0;
}

int run_third_law(const Options& o) {
    const auto bath = make_bath(o);
    oscbath::require_valid(bath);
    double gamma = 0.0;
    if (const auto* oh = std::get_if<oscbath::OhmicBath>(&bath)) gamma = oh->gamma_tilde;
    else if (const auto* dr = std::get_if<oscbath::DrudeBath>(&bath)) gamma = dr->gamma_tilde;
    else throw oscbath::ValidationError("third-law-check needs an ohmic or drude bath");

    const oscbath::FieldSpec field(o.b_field);
    const auto thetas = make_thetas(o, "third-law-check");
    const auto quad = make_quad(o);
    const auto results = oscbath::sweep(bath, field, thetas, quad);

    std::vector<std::pair<double, double>> samples;
    for (const auto& [th, r] : results) samples.emplace_back(th, r.entropy);
    const double expected = M_PI * gamma;
    const auto fit = oscbath::fit_third_law_slope(samples, o.theta_max, expected);

    const bool pass = std::abs(fit.slope - expected) <= 0.01 * expected &&
                      std::abs(fit.intercept) <= 1e-6;
    char verdict[160];
    std::snprintf(verdict, sizeof(verdict),
                  "slope=%.4f expected=%.4f intercept=%.3e %s\n", fit.slope, expected,
                  fit.intercept, pass ? "PASS" : "FAIL");

    std::ostringstream os;
    if (o.format == "csv") {
        os << "theta,S\n";
        for (const auto& [th, s] : samples) os << fmt17(th) << ',' << fmt17(s) << '\n';
        os << verdict;
    } else {
        json doc;
        doc["config"] = config_echo(o, "third-law-check");
        doc["rows"] = json::array();
        for (const auto& [th, s] : samples)
            doc["rows"].push_back({{"theta", th}, {"S", s}});
        doc["verdict"] = {{"slope", fit.slope},
                          {"expected_slope", expected},
                          {"intercept", fit.intercept},
                          {"residual_rms", fit.residual_rms},
                          {"pass", pass}};
        os << doc.dump(2) << '\n';
        std::cerr << verdict;
    }
    emit(o, os.str());
    return pass ? 0 : 3;
}

int run_compare_wigner(const Options& o) {
    const auto thetas = make_thetas(o, "compare-wigner");
    const auto rows = oscbath::compare_entropies(o.omega, thetas);

    std::ostringstream os;
    if (o.format == "csv") {
        os << "theta,S_exact,S_wigner,discrepancy\n";
        for (const auto& r : rows)
            os << fmt17(r.theta) << ',' << fmt17(r.s_exact) << ',' << fmt17(r.s_wigner)
               << ',' << fmt17(r.discrepancy) << '\n';
    } else {
        json doc;
        doc["config"] = config_echo(o, "compare-wigner");
        doc["rows"] = json::array();
        for (const auto& r : rows)
            doc["rows"].push_back({{"theta", r.theta},
                                   {"S_exact", r.s_exact},
                                   {"S_wigner", r.s_wigner},
                                   {"discrepancy", r.discrepancy}});
        doc["diagnostics"] = {{"points", rows.size()}};
        os << doc.dump(2) << '\n';
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium free energy and entropy of a quantum oscillator "
                 "coupled to a linear passive heat bath"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config")->description("flat key=value config file");

    Options o;
    app.add_option("--bath", o.bath, "bath kind: ohmic | drude | discrete")
        ->check(CLI::IsMember({"ohmic", "drude", "discrete"}));
    app.add_option("--gamma", o.gamma, "gamma/omega0 (ohmic, drude)");
    app.add_option("--omega-cut", o.omega_cut, "Drude cutoff Omega/omega0");
    app.add_option("--modes", o.modes, "discrete modes, semicolon-separated m:omega pairs");
    app.add_option("--eta", o.eta, "discrete-bath broadening eta/omega0");
    app.add_option("--b-field", o.b_field, "cyclotron ratio b = omega_c/omega0");
    app.add_option("--theta", o.thetas, "temperature kT/(hbar omega0), repeatable");
    app.add_option("--theta-log", o.theta_log, "log-spaced grid lo:hi:n");
    app.add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    app.add_option("--cutoff-lambda", o.cutoff_lambda, "tail cutoff multiplier");
    app.add_option("--max-subdivisions", o.max_subdivisions, "adaptive subdivision budget");
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", o.output, "write the table to this path");
    app.add_option("--omega", o.omega, "oscillator frequency for compare-wigner");
    app.add_option("--theta-max", o.theta_max, "low-T fit window for third-law-check");

    auto* cmd_fe = app.add_subcommand("free-energy", "free energy and entropy per theta");
    auto* cmd_s = app.add_subcommand("entropy", "entropy per theta");
    auto* cmd_sweep = app.add_subcommand("sweep", "sweep over a theta grid");
    auto* cmd_third = app.add_subcommand("third-law-check", "fit the low-T entropy slope");
    auto* cmd_wigner = app.add_subcommand("compare-wigner", "exact vs Wigner-based entropy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_fe->parsed()) return run_thermo(o, "free-energy");
        if (cmd_s->parsed()) return run_thermo(o, "entropy");
        if (cmd_sweep->parsed()) return run_thermo(o, "sweep");
        if (cmd_third->parsed()) return run_third_law(o);
        if (cmd_wigner->parsed()) return run_compare_wigner(o);
    } catch (const oscbath::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const oscbath::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what()
                  << " (evals=" << e.diagnostics.evals
                  << ", est_abs_error=" << e.diagnostics.est_abs_error << ")\n";
        return 2;
    } catch (const oscbath::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
