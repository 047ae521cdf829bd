// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file wavefunctions.hpp
 *
 *  Radial amplitudes of the bound states in two equivalent closed forms
 *  (terminating power series and confluent-hypergeometric polynomials),
 *  assembly of the full four-component spinor, and eigen-relation checks
 *  for the constants of motion P, K and j_z.
 *
 *  Exponent bookkeeping: the stored amplitudes F, G carry r^{gamma - 1/2}
 *  (they are the physical radial factors of the spinor, with the rho^{-1/2}
 *  measure factor absorbed). The pair that satisfies the coupled first-order
 *  radial equations carries r^{gamma} and is obtained from the same
 *  coefficients via coupled_amplitude(). Residuals, normalization and all
 *  perturbation integrals act on the coupled pair.
 */

#ifndef DIRAC2D_WAVEFUNCTIONS_HPP
#define DIRAC2D_WAVEFUNCTIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dirac2d/polyexp.hpp"
#include "dirac2d/quantum_numbers.hpp"
#include "dirac2d/spectrum.hpp"

namespace dirac2d {

/// One bound state's radial content. F and G share gamma_exp = gamma - 1/2
/// and beta = alpha; their polynomial degree equals n'. When norm_applied,
/// the coupled pair satisfies int (F^2 + lambda G^2) dr = 1 with a_0 > 0.
struct RadialSolution {
    QuantumNumbers qn;
    EnergyResult energy;
    PolyExp F;
    PolyExp G;
    std::vector<double> a_coeffs;
    std::vector<double> b_coeffs;
    bool norm_applied = false;
    double lambda = 0.0;
};

/// Lifts a stored amplitude to the coupled-equation form (r^{+1/2}).
inline PolyExp coupled_amplitude(const PolyExp& p)
{
    return PolyExp(p.gamma_exp + 0.5, p.beta, p.coeffs);
}

/// Expansion coefficients of the terminating series, a_0 = 1 convention:
///   b_0 = -a_0/(gamma+kappa),
///   w_i = -E a_{i-1} + alpha b_{i-1},
///   b_i = (i + gamma - kappa + alpha/E) w_i / (i (i + 2 gamma)),
///   a_i = w_i - (i + gamma + kappa) b_i.
/// Quantized E makes both series terminate after n' + 1 terms.
inline std::pair<std::vector<double>, std::vector<double>>
series_coefficients(const QuantumNumbers& qn, const EnergyResult& energy)
{
    const double kappa = 0.5 * qn.kappa.twice;
    const double gamma = energy.gamma_val;
    const double alpha = energy.alpha_val;
    const double E = energy.E;

    std::vector<double> a{1.0};
    std::vector<double> b{-1.0 / (gamma + kappa)};
    a.reserve(qn.n_prime + 1);
    b.reserve(qn.n_prime + 1);
    for (int i = 1; i <= qn.n_prime; ++i) {
        const double w = -E * a[i - 1] + alpha * b[i - 1];
        const double bi = (i + gamma - kappa + alpha / E) * w / (i * (i + 2.0 * gamma));
        b.push_back(bi);
        a.push_back(w - (i + gamma + kappa) * bi);
    }
    return {std::move(a), std::move(b)};
}

/// One more turn of the recurrence past the termination index; both returned
/// values vanish (to rounding) exactly when E is an eigenvalue.
inline std::pair<double, double>
series_termination_residual(const RadialSolution& sol)
{
    const double kappa = 0.5 * sol.qn.kappa.twice;
    const double gamma = sol.energy.gamma_val;
    const double alpha = sol.energy.alpha_val;
    const double E = sol.energy.E;
    const int i = sol.qn.n_prime + 1;

    const double w = -E * sol.a_coeffs.back() + alpha * sol.b_coeffs.back();
    const double bi = (i + gamma - kappa + alpha / E) * w / (i * (i + 2.0 * gamma));
    const double ai = w - (i + gamma + kappa) * bi;
    return {ai, bi};
}

/// Builds the radial solution for a state. With normalize = true the
/// coefficients are scaled so that the coupled pair has unit norm
/// int (F^2 + lambda G^2) dr = 1, keeping a_0 > 0.
inline RadialSolution build_radial(const QuantumNumbers& qn,
                                   const PhysicalParams& params,
                                   bool normalize = true)
{
    RadialSolution sol;
    sol.qn = qn;
    sol.lambda = params.lambda();
    sol.energy = energy(qn, params);
    auto [a, b] = series_coefficients(qn, sol.energy);

    if (normalize) {
        const PolyExp fa(sol.energy.gamma_val, sol.energy.alpha_val, a);
        const PolyExp fb(sol.energy.gamma_val, sol.energy.alpha_val, b);
        const double norm_sq = moment(product(fa, fa)) +
                               sol.lambda * moment(product(fb, fb));
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (auto& v : a) {
            v *= scale;
        }
        for (auto& v : b) {
            v *= scale;
        }
        sol.norm_applied = true;
    }
    sol.F = PolyExp(sol.energy.gamma_val - 0.5, sol.energy.alpha_val, a);
    sol.G = PolyExp(sol.energy.gamma_val - 0.5, sol.energy.alpha_val, b);
    sol.a_coeffs = std::move(a);
    sol.b_coeffs = std::move(b);
    return sol;
}

/// Kummer polynomial 1F1(-m, b; 2 alpha r) as coefficients in r
/// (finite sum: the first argument is a nonpositive integer).
inline std::vector<double> kummer_polynomial(int m, double b, double two_alpha)
{
    std::vector<double> coeffs{1.0};
    double term = 1.0;
    for (int k = 0; k < m; ++k) {
        term *= static_cast<double>(-m + k) / ((b + k) * (k + 1)) * two_alpha;
        coeffs.push_back(term);
    }
    return coeffs;
}

/// Radial amplitudes in hypergeometric form,
///   F = r^gamma e^{-alpha r} [ (kappa + 1/alpha) F1 - n' F2 ],
///   G = (E/alpha) r^gamma e^{-alpha r} [ (kappa + 1/alpha) F1 + n' F2 ],
/// with F1 = 1F1(-n', 2 gamma + 1; 2 alpha r) and
/// F2 = 1F1(1 - n', 2 gamma + 1; 2 alpha r). These carry exponent gamma and
/// solve the coupled radial equations directly; they are proportional to the
/// series form up to one global constant.
inline std::pair<PolyExp, PolyExp>
build_hypergeometric(const QuantumNumbers& qn, const PhysicalParams& params)
{
    const EnergyResult en = energy(qn, params);
    const double lambda = params.lambda();
    const double kappa = 0.5 * qn.kappa.twice;
    const double alpha = en.alpha_val;
    const double gamma = en.gamma_val;
    const int np = qn.n_prime;

    const auto f1 = kummer_polynomial(np, 2.0 * gamma + 1.0, 2.0 * alpha);
    std::vector<double> f2;
    if (np > 0) {
        f2 = kummer_polynomial(np - 1, 2.0 * gamma + 1.0, 2.0 * alpha);
    }

    const double pref = kappa + 1.0 / alpha;
    // The leading coefficient kappa + 1/alpha - n' nearly cancels for
    // kappa < 0 (there 1/alpha ~ n' + gamma and gamma ~ -kappa). Evaluate it
    // through the quantization identity alpha (n' + gamma) = 1 + lambda E,
    // with gamma + kappa = -lambda/(gamma - kappa) carrying the subtraction
    // analytically.
    const double gamma_plus_kappa =
        kappa < 0.0 ? -lambda / (gamma - kappa) : gamma + kappa;
    const double lead =
        (gamma_plus_kappa + lambda * en.E * (kappa - np)) / (1.0 + lambda * en.E);

    std::vector<double> fc(std::max(f1.size(), f2.size()), 0.0);
    std::vector<double> gc(fc.size(), 0.0);
    for (std::size_t i = 0; i < fc.size(); ++i) {
        const double c1 = i < f1.size() ? f1[i] : 0.0;
        const double c2 = i < f2.size() ? f2[i] : 0.0;
        fc[i] = pref * c1 - np * c2;
        gc[i] = en.E / alpha * (pref * c1 + np * c2);
    }
    fc[0] = lead;
    return {PolyExp(gamma, alpha, std::move(fc)), PolyExp(gamma, alpha, std::move(gc))};
}

/// Left-hand sides of the coupled radial equations,
///   dG/dr + (kappa/r) G + (1/r + E) F   and
///   dF/dr - (kappa/r) F - [lambda (1/r + E) + 2] G,
/// evaluated on the coupled pair. Both are the zero function (to rounding)
/// exactly when E is the quantized eigenvalue.
inline std::pair<PolyExp, PolyExp> radial_residual(const RadialSolution& sol)
{
    const double kappa = 0.5 * sol.qn.kappa.twice;
    const double E = sol.energy.E;
    const double lambda = sol.lambda;
    const PolyExp Fc = coupled_amplitude(sol.F);
    const PolyExp Gc = coupled_amplitude(sol.G);

    PolyExp eq1 = linear_combine({{1.0, derivative(Gc)},
                                  {kappa, mul_power(Gc, -1)},
                                  {1.0, mul_power(Fc, -1)},
                                  {E, Fc}});
    PolyExp eq2 = linear_combine({{1.0, derivative(Fc)},
                                  {-kappa, mul_power(Fc, -1)},
                                  {-lambda, mul_power(Gc, -1)},
                                  {-(lambda * E + 2.0), Gc}});
    return {std::move(eq1), std::move(eq2)};
}

inline double max_abs_coeff(const PolyExp& p)
{
    double m = 0.0;
    for (double c : p.coeffs) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

/// One of the four spinor components: an integer weight (0 or 1 from the
/// cylindrical-spinor amplitudes), the angular phase index m of e^{i m phi},
/// and whether it belongs to the lower two-spinor (radial g, factor i).
struct SpinorComponent {
    int weight = 0;
    int phase_m = 0;
    bool lower = false;
};

/// Assembled four-component state. Exactly two components are nonzero:
/// (1, 4) for eta = +1 and (2, 3) for eta = -1.
struct SpinorState {
    QuantumNumbers qn;
    PolyExp f;
    PolyExp g;
    int upper_phase = 0; // m_- = mu - 1/2
    int lower_phase = 0; // m_+ = mu + 1/2
    std::array<SpinorComponent, 4> components{};
};

/// Builds the four-component structure from a normalized radial solution.
inline SpinorState assemble_state(const RadialSolution& sol)
{
    if (!sol.norm_applied) {
        throw DomainError("assemble_state expects a normalized radial solution");
    }
    const int k2 = sol.qn.kappa.twice;
    const int m2 = sol.qn.mu.twice;
    const int w_plus = (k2 + m2) / (2 * m2);  // (kappa+mu)/(2 mu): 0 or 1
    const int w_minus = 1 - w_plus;           // (-kappa+mu)/(2 mu)
    const int m_lo = (m2 - 1) / 2;            // mu - 1/2
    const int m_hi = (m2 + 1) / 2;            // mu + 1/2

    SpinorState st;
    st.qn = sol.qn;
    st.f = sol.F;
    st.g = sol.G;
    st.upper_phase = m_lo;
    st.lower_phase = m_hi;
    st.components = {SpinorComponent{w_plus, m_lo, false},
                     SpinorComponent{w_minus, m_hi, false},
                     SpinorComponent{w_minus, m_lo, true},
                     SpinorComponent{w_plus, m_hi, true}};
    return st;
}

struct MotionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct MotionReport {
    std::vector<MotionCheck> checks;

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

/// Applies P = beta sigma'_z, j_z = l_z + sigma'_z/2 and
/// K = beta(sigma'_z l_z + 1/2) analytically to the stored phases and
/// verifies P psi = eta psi, j_z psi = mu psi, K psi = kappa psi together
/// with the eigenvalue identities kappa = mu eta and kappa^2 = mu^2.
/// All arithmetic is exact (twice-integer).
inline MotionReport check_constants_of_motion(const SpinorState& st)
{
    static constexpr int p_diag[4] = {+1, -1, -1, +1}; // beta sigma'_z
    static constexpr int s_diag[4] = {+1, -1, +1, -1}; // sigma'_z
    static constexpr int b_diag[4] = {+1, +1, -1, -1}; // beta

    MotionReport rep;
    const auto add = [&rep](const std::string& name, bool ok, std::string detail) {
        rep.checks.push_back({name, ok, std::move(detail)});
    };
    const int eta = st.qn.eta;
    const int mu2 = st.qn.mu.twice;
    const int kappa2 = st.qn.kappa.twice;

    bool p_ok = true;
    bool jz_ok = true;
    bool k_ok = true;
    std::string p_bad;
    std::string jz_bad;
    std::string k_bad;
    for (int k = 0; k < 4; ++k) {
        const auto& comp = st.components[k];
        if (comp.weight == 0) {
            continue;
        }
        if (p_diag[k] != eta) {
            p_ok = false;
            p_bad += " component " + std::to_string(k + 1);
        }
        if (2 * comp.phase_m + s_diag[k] != mu2) {
            jz_ok = false;
            jz_bad += " component " + std::to_string(k + 1);
        }
        if (b_diag[k] * (2 * s_diag[k] * comp.phase_m + 1) != kappa2) {
            k_ok = false;
            k_bad += " component " + std::to_string(k + 1);
        }
    }
    add("P psi = eta psi", p_ok, p_ok ? "" : "violated at" + p_bad);
    add("j_z psi = mu psi", jz_ok, jz_ok ? "" : "violated at" + jz_bad);
    add("K psi = kappa psi", k_ok, k_ok ? "" : "violated at" + k_bad);
    add("K = P j_z", kappa2 == eta * mu2,
        "kappa = " + to_string(st.qn.kappa) + ", eta mu = " +
            to_string(HalfInt{eta * mu2}));
    add("K^2 = j_z^2", kappa2 * kappa2 == mu2 * mu2, "");
    return rep;
}

} // namespace dirac2d

#endif
