// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file spectrum.hpp
 *
 *  Closed-form bound-state energies of the 2-D relativistic Coulomb problem
 *  and the derived kinematic parameters gamma = sqrt(kappa^2 - lambda) and
 *  alpha = sqrt(-E(2 + lambda E)).
 */

#ifndef DIRAC2D_SPECTRUM_HPP
#define DIRAC2D_SPECTRUM_HPP

#include <cmath>

#include "dirac2d/quantum_numbers.hpp"

namespace dirac2d {

/// Scaled energy E = (W - c^2)/Z^2 plus the parameters entering every radial
/// amplitude. Invariants: E < 0, 0 < gamma_val < |kappa|, alpha_val > 0.
struct EnergyResult {
    double E = 0.0;
    double W = 0.0;
    double gamma_val = 0.0;
    double alpha_val = 0.0;
};

/// Positive root sqrt(kappa^2 - lambda); square integrability selects it.
/// Throws SupercriticalCharge once lambda >= kappa^2 (for |kappa| = 1/2 that
/// is Z >= c/2), where the point-Coulomb model breaks down.
inline double gamma_param(HalfInt kappa, double lambda)
{
    const double k2 = kappa.twice * kappa.twice / 4.0;
    if (lambda >= k2) {
        throw SupercriticalCharge("lambda = " + std::to_string(lambda) +
                                  " >= kappa^2 for kappa = " + to_string(kappa));
    }
    return std::sqrt(k2 - lambda);
}

/// Bound-state energy
///   E = (1/lambda) [ (1 + lambda/(n' + gamma)^2)^{-1/2} - 1 ].
///
/// Evaluated as E = -1 / ((n'+gamma)^2 sqrt(1+x) (1 + sqrt(1+x))) with
/// x = lambda/(n'+gamma)^2, which is the same expression with the
/// subtraction carried out analytically; the raw form loses ~9 digits at
/// lambda ~ 5e-5 while the table values need 12.
inline EnergyResult energy(const QuantumNumbers& qn, const PhysicalParams& params)
{
    const double lambda = params.lambda();
    const double gamma = gamma_param(qn.kappa, lambda);
    const double denom = qn.n_prime + gamma;
    const double x = lambda / (denom * denom);
    const double s = std::sqrt(1.0 + x);

    EnergyResult res;
    res.gamma_val = gamma;
    res.E = -1.0 / (denom * denom * s * (1.0 + s));
    res.W = params.Z * params.Z * res.E + params.c * params.c;
    res.alpha_val = std::sqrt(-res.E * (2.0 + lambda * res.E));
    return res;
}

/// Nonrelativistic 2-D Coulomb energy -2/(2n-1)^2.
inline double energy_nonrel(int n)
{
    const double d = 2.0 * n - 1.0;
    return -2.0 / (d * d);
}

} // namespace dirac2d

#endif
