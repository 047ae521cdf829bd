// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file grid_oracle.hpp
 *
 *  Independent finite-difference eigensolver for the radial system, used to
 *  validate the analytic energies and first-order shifts. It shares no code
 *  path with the closed forms: the first-order system is discretized
 *  directly (no second-order reduction) with a midpoint-collocation box
 *  scheme, and the eigenvalue nearest a guess is extracted by shift-invert
 *  iteration with Rayleigh-quotient updates.
 *
 *  Discretization. With the substitution (F, G) = r^gamma (u, v) the system
 *  (D d/dr + V(r) - E S) Phi = 0 becomes
 *      D phi' + [V(r) + (gamma/r) D] phi = E S phi,
 *  where u, v are smooth at the origin. On nodes r_0 < ... < r_N each cell
 *  contributes two equations collocated at its midpoint (second order on
 *  smooth nonuniform grids, no odd-even decoupling). Boundary rows: the
 *  indicial relation u + (gamma + kappa) v = 0 at r_min (regularity, selects
 *  the r^{+gamma} branch) and u = 0 at r_max.
 */

#ifndef DIRAC2D_GRID_ORACLE_HPP
#define DIRAC2D_GRID_ORACLE_HPP

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "dirac2d/magnetic.hpp"
#include "dirac2d/quantum_numbers.hpp"
#include "dirac2d/spectrum.hpp"

namespace dirac2d {

enum class GridScheme { uniform, log_spaced };

struct GridSpec {
    double r_min = 1e-5;
    double r_max = 30.0;
    int N = 4000;
    GridScheme scheme = GridScheme::log_spaced;
};

/// Default grid for a state: log-spaced, r_min = 1e-5, r_max = 30/alpha
/// (extended by 50% for in-field runs since the magnetic term grows with r).
inline GridSpec default_grid(const EnergyResult& energy, bool with_field = false,
                             int N = 4000)
{
    GridSpec spec;
    spec.r_min = 1e-5;
    spec.r_max = 30.0 / energy.alpha_val * (with_field ? 1.5 : 1.0);
    spec.N = N;
    spec.scheme = GridScheme::log_spaced;
    return spec;
}

/// Eigenvalue plus the assembled radial amplitudes on the grid.
struct GridSolution {
    double E = 0.0;
    std::vector<double> r;
    std::vector<double> F;
    std::vector<double> G;
};

namespace detail {

inline std::vector<double> make_grid(const GridSpec& spec)
{
    if (!(0.0 < spec.r_min && spec.r_min < spec.r_max) || spec.N < 100) {
        throw DomainError("grid requires 0 < r_min < r_max and N >= 100");
    }
    std::vector<double> r(spec.N + 1);
    if (spec.scheme == GridScheme::uniform) {
        const double h = (spec.r_max - spec.r_min) / spec.N;
        for (int i = 0; i <= spec.N; ++i) {
            r[i] = spec.r_min + h * i;
        }
    } else {
        const double step = std::log(spec.r_max / spec.r_min) / spec.N;
        for (int i = 0; i <= spec.N; ++i) {
            r[i] = spec.r_min * std::exp(step * i);
        }
    }
    return r;
}

inline int count_sign_changes(const std::vector<double>& values, double floor_frac)
{
    double vmax = 0.0;
    for (double v : values) {
        vmax = std::max(vmax, std::abs(v));
    }
    const double floor = floor_frac * vmax;
    int changes = 0;
    double prev = 0.0;
    for (double v : values) {
        if (std::abs(v) < floor) {
            continue;
        }
        if (prev != 0.0 && v * prev < 0.0) {
            ++changes;
        }
        prev = v;
    }
    return changes;
}

} // namespace detail

/// Discrete eigenvalue of the (possibly in-field) radial system nearest
/// E_guess, together with the eigenvector resampled to (F, G).
inline GridSolution solve_radial_numeric_full(const QuantumNumbers& qn,
                                              const PhysicalParams& params,
                                              double B, const GridSpec& spec,
                                              double E_guess)
{
    if (!(E_guess < 0.0)) {
        throw DomainError("E_guess must lie in the bound region (E < 0)");
    }
    const double lambda = params.lambda();
    const double gamma = gamma_param(qn.kappa, lambda);
    const double kappa = 0.5 * qn.kappa.twice;
    const RadialOperator op = perturbed_radial_system(qn, params, B);

    const std::vector<double> r = detail::make_grid(spec);
    const int nodes = static_cast<int>(r.size());
    const int dim = 2 * nodes;

    using Trip = Eigen::Triplet<double>;
    std::vector<Trip> a_trip;
    std::vector<Trip> b_trip;
    a_trip.reserve(8 * nodes);
    b_trip.reserve(4 * nodes);

    // Row 0: indicial regularity u + (gamma + kappa) v = 0 at r_min.
    a_trip.emplace_back(0, 0, 1.0);
    a_trip.emplace_back(0, 1, gamma + kappa);

    // Cell equations collocated at midpoints.
    for (int i = 0; i < nodes - 1; ++i) {
        const double h = r[i + 1] - r[i];
        const double m = 0.5 * (r[i] + r[i + 1]);
        const auto v = op.potential(m);
        const double g_over_m = gamma / m;
        // W = V(m) + (gamma/m) D with D = [[0,-1],[1,0]]
        const double w11 = v[0];
        const double w12 = v[1] - g_over_m;
        const double w21 = v[2] + g_over_m;
        const double w22 = v[3];

        const int row = 1 + 2 * i;
        const int ci = 2 * i;
        const int cj = 2 * (i + 1);
        // First scalar equation: -u'... uses D row (0,-1): -(v_{i+1}-v_i)/h
        a_trip.emplace_back(row, ci, 0.5 * w11);
        a_trip.emplace_back(row, ci + 1, 1.0 / h + 0.5 * w12);
        a_trip.emplace_back(row, cj, 0.5 * w11);
        a_trip.emplace_back(row, cj + 1, -1.0 / h + 0.5 * w12);
        b_trip.emplace_back(row, ci, 0.5);
        b_trip.emplace_back(row, cj, 0.5);
        // Second scalar equation: D row (1,0): +(u_{i+1}-u_i)/h
        a_trip.emplace_back(row + 1, ci, -1.0 / h + 0.5 * w21);
        a_trip.emplace_back(row + 1, ci + 1, 0.5 * w22);
        a_trip.emplace_back(row + 1, cj, 1.0 / h + 0.5 * w21);
        a_trip.emplace_back(row + 1, cj + 1, 0.5 * w22);
        b_trip.emplace_back(row + 1, ci + 1, 0.5 * lambda);
        b_trip.emplace_back(row + 1, cj + 1, 0.5 * lambda);
    }

    // Last row: u = 0 at r_max.
    a_trip.emplace_back(dim - 1, 2 * (nodes - 1), 1.0);

    Eigen::SparseMatrix<double> A(dim, dim);
    Eigen::SparseMatrix<double> Bm(dim, dim);
    A.setFromTriplets(a_trip.begin(), a_trip.end());
    Bm.setFromTriplets(b_trip.begin(), b_trip.end());

    // Shift-invert iteration with Rayleigh-quotient refresh.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.5, 1.0);
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) {
        x[i] = uni(rng);
    }
    x.normalize();

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    double sigma = E_guess;
    double eig = E_guess;
    bool factored = false;
    const int max_iter = 60;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        if (!factored) {
            Eigen::SparseMatrix<double> shifted = A - sigma * Bm;
            lu.compute(shifted);
            if (lu.info() != Eigen::Success) {
                // Shift essentially hit an eigenvalue; nudge and retry.
                sigma *= 1.0 + 1e-10;
                sigma -= 1e-14;
                continue;
            }
            factored = true;
        }
        const Eigen::VectorXd y = lu.solve(Bm * x);
        const double growth = y.dot(x); // ~ 1/(eig - sigma)
        if (!std::isfinite(growth) || growth == 0.0) {
            throw ConvergenceFailure("shift-invert iteration produced no growth");
        }
        const double eig_new = sigma + 1.0 / growth;
        const bool settled = std::abs(eig_new - eig) <=
                             1e-13 * std::max(1.0, std::abs(eig_new));
        eig = eig_new;
        x = y.normalized();
        if (settled && it >= 2) {
            converged = true;
            break;
        }
        if (it >= 2) {
            sigma = eig; // Rayleigh update
            factored = false;
        }
    }
    if (!converged) {
        throw ConvergenceFailure("eigenvalue iteration did not settle");
    }
    if (std::abs(eig - E_guess) > 0.5 * std::abs(E_guess)) {
        throw NoEigenvalueNear("nearest eigenvalue " + std::to_string(eig) +
                               " is not within half of |E_guess| = " +
                               std::to_string(std::abs(E_guess)));
    }

    // Node-count sanity check on the large component: F for kappa > 0, G for
    // kappa < 0 (whose leading coefficient ~ 1/(gamma + kappa) dominates).
    const int offset = qn.kappa.twice > 0 ? 0 : 1;
    std::vector<double> u(nodes);
    for (int i = 0; i < nodes; ++i) {
        u[i] = x[2 * i + offset];
    }
    const int node_count = detail::count_sign_changes(u, 1e-6);
    if (node_count != qn.n_prime) {
        throw ConvergenceFailure("eigenvector has " + std::to_string(node_count) +
                                 " nodes, expected n' = " +
                                 std::to_string(qn.n_prime));
    }

    GridSolution sol;
    sol.E = eig;
    sol.r = r;
    sol.F.resize(nodes);
    sol.G.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double rg = std::pow(r[i], gamma);
        sol.F[i] = rg * x[2 * i];
        sol.G[i] = rg * x[2 * i + 1];
    }
    return sol;
}

/// Eigenvalue-only variant.
inline double solve_radial_numeric(const QuantumNumbers& qn,
                                   const PhysicalParams& params, double B,
                                   const GridSpec& spec, double E_guess)
{
    return solve_radial_numeric_full(qn, params, B, spec, E_guess).E;
}

/// One Richardson step for the second-order scheme: (4 E_{2N} - E_N) / 3.
inline double solve_radial_refined(const QuantumNumbers& qn,
                                   const PhysicalParams& params, double B,
                                   const GridSpec& spec, double E_guess)
{
    const double coarse = solve_radial_numeric(qn, params, B, spec, E_guess);
    GridSpec fine = spec;
    fine.N = 2 * spec.N;
    const double refined = solve_radial_numeric(qn, params, B, fine, coarse);
    return (4.0 * refined - coarse) / 3.0;
}

/// Central-difference slope (E(+B) - E(-B)) / (2B) on matched grids; the
/// discretization error largely cancels between the two solves.
inline double finite_field_slope(const QuantumNumbers& qn,
                                 const PhysicalParams& params, double B_small,
                                 const GridSpec& spec)
{
    const double guess = energy(qn, params).E;
    const double plus = solve_radial_numeric(qn, params, B_small, spec, guess);
    const double minus = solve_radial_numeric(qn, params, -B_small, spec, guess);
    return (plus - minus) / (2.0 * B_small);
}

/// Richardson-extrapolated slope, for the small-shift states where the
/// discretization error of the slope itself matters.
inline double finite_field_slope_refined(const QuantumNumbers& qn,
                                         const PhysicalParams& params,
                                         double B_small, const GridSpec& spec)
{
    const double coarse = finite_field_slope(qn, params, B_small, spec);
    GridSpec fine = spec;
    fine.N = 2 * spec.N;
    const double refined = finite_field_slope(qn, params, B_small, fine);
    return (4.0 * refined - coarse) / 3.0;
}

} // namespace dirac2d

#endif
