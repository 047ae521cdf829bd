// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: bound-state levels, first-order magnetic shifts,
// radial amplitude sampling, the built-in reference tables, and the
// self-verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error,
//             3 supercritical charge, 4 shift route disagreement.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirac2d/grid_oracle.hpp"
#include "dirac2d/magnetic.hpp"
#include "dirac2d/quantum_numbers.hpp"
#include "dirac2d/spectrum.hpp"
#include "dirac2d/tables.hpp"
#include "dirac2d/verify.hpp"
#include "dirac2d/wavefunctions.hpp"

namespace {

using namespace dirac2d;

OutputFormat parse_format(const std::string& name)
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    return OutputFormat::pretty;
}

int run_levels(const PhysicalParams& params, int n_max, const std::string& format)
{
    std::cout << render_records(level_records(params, n_max), parse_format(format));
    return 0;
}

int run_zeeman(const PhysicalParams& params, int n, const std::string& kappa_text,
               const std::string& mu_text, const std::string& route,
               const std::string& format)
{
    const auto qn = validate_state(n, parse_half_int(kappa_text),
                                   parse_half_int(mu_text));
    double e1 = 0.0;
    if (route == "quadrature") {
        e1 = shift_quadrature(build_radial(qn, params)).E1;
    } else if (route == "closed") {
        e1 = shift_closed(qn, params).E1;
    } else { // both: closed value, quadrature cross-check
        const double closed = shift_closed(qn, params).E1;
        const double quad = shift_quadrature(build_radial(qn, params)).E1;
        if (std::abs(closed - quad) > 1e-10 * std::max(1.0, std::abs(closed))) {
            std::cerr << "route disagreement: closed " << closed
                      << " vs quadrature " << quad << "\n";
            return 4;
        }
        e1 = closed;
    }
    std::cout << render_records({zeeman_record(qn, params, e1)},
                                parse_format(format));
    return 0;
}

int run_wavefunction(const PhysicalParams& params, int n,
                     const std::string& kappa_text, int samples, double r_max,
                     const std::string& format)
{
    const auto kappa = parse_half_int(kappa_text);
    const auto qn = validate_state(n, kappa, abs(kappa));
    const auto sol = build_radial(qn, params);
    const double lambda = params.lambda();

    const OutputFormat fmt = parse_format(format);
    if (fmt == OutputFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int k = 1; k <= samples; ++k) {
            const double r = r_max * k / samples;
            const double f = eval(sol.F, r);
            const double g = eval(sol.G, r);
            nlohmann::ordered_json obj;
            obj["r"] = r;
            obj["F"] = f;
            obj["G"] = g;
            obj["density"] = f * f + lambda * g * g;
            arr.push_back(obj);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (fmt == OutputFormat::csv) {
        std::cout << "r,F,G,density\n";
    } else {
        std::printf("%22s %22s %22s %22s\n", "r", "F", "G", "density");
    }
    for (int k = 1; k <= samples; ++k) {
        const double r = r_max * k / samples;
        const double f = eval(sol.F, r);
        const double g = eval(sol.G, r);
        const double density = f * f + lambda * g * g;
        if (fmt == OutputFormat::csv) {
            std::printf("%.12e,%.12e,%.12e,%.12e\n", r, f, g, density);
        } else {
            std::printf("%22.12e %22.12e %22.12e %22.12e\n", r, f, g, density);
        }
    }
    return 0;
}

int run_tables(const std::string& which)
{
    std::cout << (which == "t1" ? render_table_t1() : render_table_t2());
    return 0;
}

int run_verify(const VerifyOptions& opts)
{
    const VerifyReport report = run_verification(opts);
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) {
            std::cout << "  (" << check.detail << ")";
        }
        std::cout << "\n";
    }
    std::cout << (report.all_passed() ? "all checks passed\n"
                                      : "verification FAILED\n");
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bound states of the two-dimensional relativistic hydrogenic "
                 "atom: exact levels, wavefunctions and linear magnetic shifts"};
    app.require_subcommand(1);

    PhysicalParams params;
    std::string format = "pretty";

    auto* levels = app.add_subcommand("levels", "Field-free energy levels");
    int n_max = 3;
    levels->add_option("--Z", params.Z, "Nuclear charge (a.u.)");
    levels->add_option("--c", params.c, "Speed of light (a.u.)");
    levels->add_option("--n-max", n_max, "Largest principal quantum number")
        ->check(CLI::PositiveNumber);
    levels->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));

    auto* zeeman = app.add_subcommand(
        "zeeman", "First-order magnetic shift of one state");
    int n_state = 1;
    std::string kappa_text = "1/2";
    std::string mu_text = "1/2";
    std::string route = "both";
    zeeman->add_option("--Z", params.Z, "Nuclear charge (a.u.)");
    zeeman->add_option("--c", params.c, "Speed of light (a.u.)");
    zeeman->add_option("--n", n_state, "Principal quantum number")->required();
    zeeman->add_option("--kappa", kappa_text, "kappa as a fraction, e.g. -3/2")
        ->required();
    zeeman->add_option("--mu", mu_text, "mu as a fraction, e.g. 1/2")->required();
    zeeman->add_option("--route", route, "Evaluation route")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}));
    zeeman->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));

    auto* wavefunction = app.add_subcommand(
        "wavefunction", "Sample the radial amplitudes of one level");
    int samples = 50;
    double r_max = 20.0;
    wavefunction->add_option("--Z", params.Z, "Nuclear charge (a.u.)");
    wavefunction->add_option("--c", params.c, "Speed of light (a.u.)");
    wavefunction->add_option("--n", n_state, "Principal quantum number")
        ->required();
    wavefunction
        ->add_option("--kappa", kappa_text, "kappa as a fraction, e.g. -3/2")
        ->required();
    wavefunction->add_option("--samples", samples, "Number of radii")
        ->check(CLI::PositiveNumber);
    wavefunction->add_option("--r-max", r_max, "Largest radius (scaled units)")
        ->check(CLI::PositiveNumber);
    wavefunction->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));

    auto* tables = app.add_subcommand("tables", "Reference tables");
    std::string which = "t1";
    tables->add_option("which", which, "Table to print: t1 or t2")
        ->required()
        ->check(CLI::IsMember({"t1", "t2"}));

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    VerifyOptions vopts;
    verify->add_flag("--with-grid", vopts.with_grid,
                     "Include the finite-difference oracle checks");
    verify->add_option("--B", vopts.B_small,
                       "Field strength for the grid slope check");
    verify->add_option("--grid-points", vopts.grid_points, "Grid resolution")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", vopts.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*levels) {
            return run_levels(params, n_max, format);
        }
        if (*zeeman) {
            return run_zeeman(params, n_state, kappa_text, mu_text, route, format);
        }
        if (*wavefunction) {
            return run_wavefunction(params, n_state, kappa_text, samples, r_max,
                                    format);
        }
        if (*tables) {
            return run_tables(which);
        }
        if (*verify) {
            return run_verify(vopts);
        }
    } catch (const SupercriticalCharge& e) {
        std::cerr << "supercritical charge: " << e.what() << "\n";
        return 3;
    } catch (const InvalidKappa& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return 2;
    } catch (const ForbiddenNegativeKappa& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return 2;
    } catch (const MuMismatch& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
