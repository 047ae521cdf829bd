// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file quantum_numbers.hpp
 *
 *  Good quantum numbers of the 2-D relativistic Coulomb problem and their
 *  validity constraints. A bound state is labelled by (n, kappa, mu) with
 *  kappa and mu half-odd integers, |mu| = |kappa|, and eta = kappa/mu = +-1.
 */

#ifndef DIRAC2D_QUANTUM_NUMBERS_HPP
#define DIRAC2D_QUANTUM_NUMBERS_HPP

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "dirac2d/errors.hpp"
#include "dirac2d/half_integer.hpp"

namespace dirac2d {

inline constexpr double kDefaultSpeedOfLight = 137.03599976;

/// Nuclear charge, speed of light and the derived relativistic strength
/// lambda = (Z/c)^2, all in atomic units. B is the scaled magnetic field
/// (after B := B/Z^2).
struct PhysicalParams {
    double Z = 1.0;
    double c = kDefaultSpeedOfLight;
    double B = 0.0;

    double lambda() const { return (Z / c) * (Z / c); }
};

/// Complete state label. n_prime, eta and l are derived:
///   n = n' + |kappa| + 1/2,  eta = kappa/mu,  l = |kappa - 1/2|.
struct QuantumNumbers {
    int n = 1;
    int n_prime = 0;
    HalfInt kappa{1};
    HalfInt mu{1};
    int eta = 1;
    int l = 0;

    bool operator==(const QuantumNumbers&) const = default;
};

/// Checks (n, kappa, mu) against every constraint and fills in the derived
/// numbers. kappa must be half-odd with |kappa| <= n - 1/2, kappa > 0 when
/// n' = 0, and |mu| = |kappa|.
inline QuantumNumbers validate_state(int n, HalfInt kappa, HalfInt mu)
{
    if (!kappa.is_half_odd()) {
        throw InvalidKappa("kappa = " + to_string(kappa) +
                           " is not a half-odd integer");
    }
    const int abs2k = abs(kappa).twice;
    if (n < 1 || abs2k > 2 * n - 1) {
        throw InvalidKappa("|kappa| = " + to_string(abs(kappa)) +
                           " exceeds n - 1/2 for n = " + std::to_string(n));
    }
    const int n_prime = (2 * n - abs2k - 1) / 2;
    if (n_prime == 0 && kappa.twice < 0) {
        throw ForbiddenNegativeKappa("kappa = " + to_string(kappa) +
                                     " requires n' > 0, but n' = 0 for n = " +
                                     std::to_string(n));
    }
    if (abs(mu) != abs(kappa)) {
        throw MuMismatch("|mu| = " + to_string(abs(mu)) + " differs from |kappa| = " +
                         to_string(abs(kappa)));
    }
    QuantumNumbers qn;
    qn.n = n;
    qn.n_prime = n_prime;
    qn.kappa = kappa;
    qn.mu = mu;
    qn.eta = sign(kappa) * sign(mu);
    qn.l = std::abs(kappa.twice - 1) / 2;
    return qn;
}

/// All valid states with n <= n_max, sorted by (n, |kappa|, kappa, mu).
/// Each shell n carries 2n-1 kappa values and 2(2n-1) states.
inline std::vector<QuantumNumbers> enumerate_states(int n_max)
{
    std::vector<QuantumNumbers> states;
    for (int n = 1; n <= n_max; ++n) {
        for (int abs2k = 1; abs2k <= 2 * n - 1; abs2k += 2) {
            for (int sk : {-1, +1}) {
                if (sk < 0 && abs2k == 2 * n - 1) {
                    continue; // n' = 0 admits positive kappa only
                }
                for (int sm : {-1, +1}) {
                    states.push_back(validate_state(n, HalfInt{sk * abs2k},
                                                    HalfInt{sm * abs2k}));
                }
            }
        }
    }
    std::sort(states.begin(), states.end(),
              [](const QuantumNumbers& a, const QuantumNumbers& b) {
                  const auto key = [](const QuantumNumbers& q) {
                      return std::tuple(q.n, abs(q.kappa).twice, q.kappa.twice,
                                        q.mu.twice);
                  };
                  return key(a) < key(b);
              });
    return states;
}

/// "2p3/2"-style label: n, the letter for l, and |kappa| as a fraction.
inline std::string spectroscopic_label(const QuantumNumbers& qn)
{
    static constexpr char letters[] = "spdfghiklmnoqrtuvwxyz";
    const int max_l = static_cast<int>(sizeof(letters)) - 2;
    const char orbital = qn.l <= max_l ? letters[qn.l] : '?';
    return std::to_string(qn.n) + orbital + to_string(abs(qn.kappa));
}

} // namespace dirac2d

#endif
