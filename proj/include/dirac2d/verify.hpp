// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file verify.hpp
 *
 *  Self-contained invariant suite behind the `verify` CLI command: exact
 *  residuals, series termination, degeneracies, route agreement, limits,
 *  operator eigen-relations, and (optionally) the grid-oracle cross checks.
 */

#ifndef DIRAC2D_VERIFY_HPP
#define DIRAC2D_VERIFY_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "dirac2d/grid_oracle.hpp"
#include "dirac2d/magnetic.hpp"
#include "dirac2d/quantum_numbers.hpp"
#include "dirac2d/spectrum.hpp"
#include "dirac2d/tables.hpp"
#include "dirac2d/wavefunctions.hpp"

namespace dirac2d {

struct VerifyOptions {
    bool with_grid = false;
    double B_small = 1e-4;
    int grid_points = 4000;
    bool inject_fault = false; // test hook: corrupts one tolerance
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

inline VerifyReport run_verification(const VerifyOptions& opts = {})
{
    VerifyReport rep;
    const auto add = [&rep](const std::string& name, bool ok, std::string detail) {
        rep.checks.push_back({name, ok, std::move(detail)});
    };
    const PhysicalParams params;
    const auto states = enumerate_states(3);

    std::vector<RadialSolution> sols;
    sols.reserve(states.size());
    for (const auto& qn : states) {
        sols.push_back(build_radial(qn, params));
    }

    // Exact-solution residuals of the coupled radial equations.
    {
        const double tol = opts.inject_fault ? 0.0 : 1e-12;
        double worst = 0.0;
        for (const auto& sol : sols) {
            const double scale =
                std::max(max_abs_coeff(sol.F), max_abs_coeff(sol.G));
            const auto [eq1, eq2] = radial_residual(sol);
            worst = std::max(worst, max_abs_coeff(eq1) / scale);
            worst = std::max(worst, max_abs_coeff(eq2) / scale);
        }
        add("radial residuals vanish", worst <= tol,
            "worst relative coefficient " + std::to_string(worst));
    }

    // Series termination at n' + 1.
    {
        double worst = 0.0;
        for (const auto& sol : sols) {
            const double scale =
                std::max(max_abs_coeff(sol.F), max_abs_coeff(sol.G));
            const auto [a_next, b_next] = series_termination_residual(sol);
            worst = std::max(worst,
                             std::max(std::abs(a_next), std::abs(b_next)) / scale);
        }
        add("series termination", worst <= 1e-12,
            "worst relative coefficient " + std::to_string(worst));
    }

    // Unit normalization of the coupled pair.
    {
        double worst = 0.0;
        for (const auto& sol : sols) {
            const PolyExp Fc = coupled_amplitude(sol.F);
            const PolyExp Gc = coupled_amplitude(sol.G);
            const double norm =
                moment(product(Fc, Fc)) + sol.lambda * moment(product(Gc, Gc));
            worst = std::max(worst, std::abs(norm - 1.0));
        }
        add("normalization", worst <= 1e-12, "worst |norm - 1| = " +
            std::to_string(worst));
    }

    // Energy degeneracy in the sign of kappa, bit identical.
    {
        bool ok = true;
        for (const auto& qn : states) {
            if (qn.kappa.twice < 0 || abs(qn.kappa).twice == 2 * qn.n - 1) {
                continue;
            }
            const auto partner = validate_state(qn.n, -qn.kappa, qn.mu);
            ok = ok && energy(qn, params).E == energy(partner, params).E;
        }
        add("kappa degeneracy bit-identical", ok, "");
    }

    // Energy strictly increases with |kappa| at fixed n.
    {
        bool ok = true;
        for (int n = 1; n <= 3; ++n) {
            double prev = -1e300;
            for (int abs2k = 1; abs2k <= 2 * n - 1; abs2k += 2) {
                const auto qn = validate_state(n, HalfInt{abs2k}, HalfInt{abs2k});
                const double e = energy(qn, params).E;
                ok = ok && e > prev;
                prev = e;
            }
        }
        add("energy ordering in |kappa|", ok, "");
    }

    // First-order lambda scaling: halving lambda halves E - E_nonrel.
    {
        bool ok = true;
        std::string detail;
        PhysicalParams half_lambda = params;
        half_lambda.c = params.c * std::sqrt(2.0);
        for (int n = 1; n <= 3; ++n) {
            const auto qn = validate_state(n, HalfInt{1}, HalfInt{1});
            const double gap = energy(qn, params).E - energy_nonrel(n);
            const double gap_half = energy(qn, half_lambda).E - energy_nonrel(n);
            const double ratio = gap / gap_half;
            if (std::abs(ratio - 2.0) > 0.1) {
                ok = false;
                detail = "ratio " + std::to_string(ratio) + " at n = " +
                         std::to_string(n);
            }
        }
        add("lambda scaling of E - E_nonrel", ok, detail);
    }

    // alpha^2 + E(2 + lambda E) = 0.
    {
        double worst = 0.0;
        for (const auto& sol : sols) {
            const double a = sol.energy.alpha_val;
            const double E = sol.energy.E;
            worst = std::max(worst, std::abs(a * a + E * (2.0 + sol.lambda * E)));
        }
        add("alpha consistency", worst <= 1e-14, "worst " + std::to_string(worst));
    }

    // Nonrelativistic limits at c = 1e6.
    {
        PhysicalParams nr = params;
        nr.c = 1e6;
        double worst_e = 0.0;
        double worst_s = 0.0;
        for (const auto& qn : states) {
            worst_e = std::max(worst_e, std::abs(energy(qn, nr).E -
                                                 energy_nonrel(qn.n)));
            const double target = shift_nonrel(qn);
            worst_s = std::max(worst_s,
                               std::abs(shift_closed(qn, nr).E1 - target));
            worst_s = std::max(
                worst_s,
                std::abs(shift_quadrature(build_radial(qn, nr)).E1 - target));
        }
        add("nonrelativistic energy limit", worst_e <= 1e-9,
            "worst " + std::to_string(worst_e));
        add("nonrelativistic shift limit", worst_s <= 1e-9,
            "worst " + std::to_string(worst_s));
    }

    // Route agreement: closed vs quadrature, and the n' = 0 pair.
    {
        double worst = 0.0;
        double worst_n0 = 0.0;
        for (const auto& sol : sols) {
            const double closed = shift_closed(sol.qn, params).E1;
            const double quad = shift_quadrature(sol).E1;
            worst = std::max(worst, std::abs(closed - quad) /
                                        std::max(1.0, std::abs(closed)));
            if (sol.qn.n_prime == 0) {
                const double general = shift_closed_general(sol.qn, params).E1;
                worst_n0 = std::max(worst_n0, std::abs(general - closed) /
                                                  std::max(1.0, std::abs(closed)));
            }
        }
        add("shift route agreement", worst <= 1e-12, "worst " + std::to_string(worst));
        add("n'=0 closed form vs integrals", worst_n0 <= 1e-12,
            "worst " + std::to_string(worst_n0));
    }

    // E1 is exactly antisymmetric in mu.
    {
        bool ok = true;
        for (const auto& qn : states) {
            const auto flipped = validate_state(qn.n, qn.kappa, -qn.mu);
            ok = ok && shift_closed(qn, params).E1 ==
                           -shift_closed(flipped, params).E1;
            ok = ok && shift_quadrature(build_radial(qn, params)).E1 ==
                           -shift_quadrature(build_radial(flipped, params)).E1;
        }
        add("mu antisymmetry of E1", ok, "");
    }

    // Field-free degeneracy is completely lifted at first order.
    {
        bool ok = true;
        for (int n = 2; n <= 3; ++n) {
            for (int abs2k = 1; abs2k <= 2 * n - 3; abs2k += 2) {
                std::vector<double> shifts;
                for (int sk : {+1, -1}) {
                    for (int sm : {+1, -1}) {
                        const auto qn = validate_state(n, HalfInt{sk * abs2k},
                                                       HalfInt{sm * abs2k});
                        shifts.push_back(shift_closed(qn, params).E1);
                    }
                }
                for (std::size_t i = 0; i < shifts.size(); ++i) {
                    for (std::size_t j = i + 1; j < shifts.size(); ++j) {
                        ok = ok && shifts[i] != shifts[j];
                    }
                }
            }
        }
        add("degeneracy lifting", ok, "");
    }

    // Shift pair-sum identity: E1(kappa) - E1(-kappa) = 1/2 at mu = +|kappa|
    // (A2 = 1/4 exactly).
    {
        double worst = 0.0;
        for (const auto& qn : states) {
            if (qn.kappa.twice < 0 || abs(qn.kappa).twice == 2 * qn.n - 1 ||
                qn.mu != abs(qn.kappa)) {
                continue;
            }
            const auto partner = validate_state(qn.n, -qn.kappa, qn.mu);
            const double diff = shift_closed(qn, params).E1 -
                                shift_closed(partner, params).E1;
            worst = std::max(worst, std::abs(diff - 0.5));
        }
        add("shift pair split identity", worst <= 1e-10,
            "worst |diff - 1/2| = " + std::to_string(worst));
    }

    // State count: |enumerate(n_max)| = 2 n_max^2.
    {
        bool ok = true;
        for (int n_max = 1; n_max <= 5; ++n_max) {
            ok = ok && enumerate_states(n_max).size() ==
                           static_cast<std::size_t>(2 * n_max * n_max);
        }
        add("state count 2 n_max^2", ok, "");
    }

    // Constants of motion, plus a mutated negative control.
    {
        bool ok = true;
        std::string detail;
        for (const auto& sol : sols) {
            const auto report = check_constants_of_motion(assemble_state(sol));
            if (!report.all_passed()) {
                ok = false;
                detail = "failed for " + spectroscopic_label(sol.qn);
            }
        }
        SpinorState mutated = assemble_state(sols.front()); // 1s, eta = +1
        mutated.components = {SpinorComponent{0, mutated.upper_phase, false},
                              SpinorComponent{1, mutated.lower_phase, false},
                              SpinorComponent{1, mutated.upper_phase, true},
                              SpinorComponent{0, mutated.lower_phase, true}};
        if (check_constants_of_motion(mutated).all_passed()) {
            ok = false;
            detail = "negative control not flagged";
        }
        add("constants of motion", ok, detail);
    }

    // Series vs hypergeometric forms: one global constant, 20 log radii.
    {
        double worst = 0.0;
        for (const auto& sol : sols) {
            const auto [fh, gh] = build_hypergeometric(sol.qn, params);
            const double c0 = fh.coeffs.back() / sol.a_coeffs.back();
            for (int k = 0; k < 20; ++k) {
                const double r = 0.05 * std::pow(400.0, k / 19.0); // 0.05 .. 20
                const double fs = eval(coupled_amplitude(sol.F), r);
                const double gs = eval(coupled_amplitude(sol.G), r);
                worst = std::max(worst, std::abs(eval(fh, r) - c0 * fs) /
                                            std::max(1e-30, std::abs(c0 * fs)));
                worst = std::max(worst, std::abs(eval(gh, r) - c0 * gs) /
                                            std::max(1e-30, std::abs(c0 * gs)));
            }
        }
        add("series vs hypergeometric forms", worst <= 1e-12,
            "worst relative " + std::to_string(worst));
    }

    if (opts.with_grid) {
        const auto grid_energy_check = [&](const char* label, int n, int twice_kappa) {
            const auto qn = validate_state(n, HalfInt{twice_kappa},
                                           HalfInt{std::abs(twice_kappa)});
            const auto en = energy(qn, params);
            const GridSpec spec = default_grid(en, false, opts.grid_points);
            const double numeric =
                solve_radial_refined(qn, params, 0.0, spec, en.E);
            add(std::string("grid energy ") + label,
                std::abs(numeric - en.E) <= 1e-6,
                "numeric " + std::to_string(numeric) + " vs analytic " +
                    std::to_string(en.E));
        };
        grid_energy_check("1s1/2", 1, 1);
        grid_energy_check("2s1/2", 2, 1);
        grid_energy_check("2p3/2", 2, 3);

        const auto qn = validate_state(1, HalfInt{1}, HalfInt{1});
        const auto en = energy(qn, params);
        const GridSpec spec = default_grid(en, true, opts.grid_points);
        const double slope = finite_field_slope(qn, params, opts.B_small, spec);
        const double analytic = shift_closed(qn, params).E1;
        add("grid field slope 1s1/2", std::abs(slope - analytic) <= 1e-4,
            "numeric " + std::to_string(slope) + " vs analytic " +
                std::to_string(analytic));
    }

    return rep;
}

} // namespace dirac2d

#endif
