// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dirac2d/wavefunctions.hpp"
#include "test_helpers.hpp"

using namespace dirac2d;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const PhysicalParams kParams;

QuantumNumbers state(int n, int twice_kappa, int twice_mu)
{
    return validate_state(n, HalfInt{twice_kappa}, HalfInt{twice_mu});
}

} // namespace

TEST_CASE("series coefficients for n' = 0 states")
{
    const auto qn = state(1, 1, 1);
    const auto en = energy(qn, kParams);
    const auto [a, b] = series_coefficients(qn, en);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0] == 1.0);
    CHECK_THAT(b[0], WithinRel(-1.0000532570261636, 1e-14));
    CHECK_THAT(b[0], WithinRel(-1.0 / (en.gamma_val + 0.5), 1e-15));
}

TEST_CASE("series coefficients for the 2s state")
{
    const auto qn = state(2, 1, 1);
    const auto [a, b] = series_coefficients(qn, energy(qn, kParams));
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    CHECK_THAT(a[0], WithinRel(1.0, 1e-15));
    CHECK_THAT(a[1], WithinRel(-1.33345957501146, 1e-13));
    CHECK_THAT(b[0], WithinRel(-1.00005325702616, 1e-13));
    CHECK_THAT(b[1], WithinRel(0.444499675882849, 1e-13));
}

TEST_CASE("series terminate exactly at the quantized energy")
{
    for (const auto& qn : enumerate_states(3)) {
        const auto sol = build_radial(qn, kParams);
        const double scale = std::max(max_abs_coeff(sol.F), max_abs_coeff(sol.G));
        const auto [a_next, b_next] = series_termination_residual(sol);
        CHECK(std::abs(a_next) < 1e-12 * scale);
        CHECK(std::abs(b_next) < 1e-12 * scale);
    }
}

TEST_CASE("build_radial degrees, exponents and normalization")
{
    const auto one_s = build_radial(state(1, 1, 1), kParams);
    CHECK(one_s.F.degree() == 0);
    CHECK(one_s.G.degree() == 0);
    CHECK(one_s.F.gamma_exp == one_s.energy.gamma_val - 0.5);
    CHECK(one_s.F.beta == one_s.energy.alpha_val);

    const auto two_s = build_radial(state(2, 1, 1), kParams);
    CHECK(two_s.F.degree() == 1);
    CHECK(two_s.G.degree() == 1);

    for (const auto& qn : enumerate_states(3)) {
        const auto sol = build_radial(qn, kParams);
        CHECK(sol.norm_applied);
        CHECK(sol.F.degree() == qn.n_prime);
        CHECK(sol.G.degree() == qn.n_prime);
        CHECK(sol.a_coeffs.front() > 0.0);
        const PolyExp Fc = coupled_amplitude(sol.F);
        const PolyExp Gc = coupled_amplitude(sol.G);
        const double norm =
            moment(product(Fc, Fc)) + sol.lambda * moment(product(Gc, Gc));
        CHECK_THAT(norm, WithinAbs(1.0, 1e-12));
    }

    const auto raw = build_radial(state(1, 1, 1), kParams, false);
    CHECK(!raw.norm_applied);
    CHECK(raw.a_coeffs.front() == 1.0);
}

TEST_CASE("normalization agrees with independent quadrature")
{
    const auto sol = build_radial(state(2, -1, 1), kParams);
    const double numeric = oracle::integrate_to(
        [&](double r) {
            const double f = eval(sol.F, r);
            const double g = eval(sol.G, r);
            return r * (f * f + sol.lambda * g * g);
        },
        50.0 / sol.energy.alpha_val);
    CHECK_THAT(numeric, WithinAbs(1.0, 1e-10));
}

TEST_CASE("hypergeometric form for n' = 0 collapses to a single power")
{
    const auto [fh, gh] = build_hypergeometric(state(1, 1, 1), kParams);
    CHECK(fh.degree() == 0);
    CHECK(gh.degree() == 0);
    const auto en = energy(state(1, 1, 1), kParams);
    CHECK(fh.gamma_exp == en.gamma_val);
    // G/F = E/alpha for n' = 0.
    CHECK_THAT(gh.coeffs[0] / fh.coeffs[0],
               WithinRel(en.E / en.alpha_val, 1e-14));
}

TEST_CASE("hypergeometric form of 2s is a degree-1 polynomial")
{
    const auto [fh, gh] = build_hypergeometric(state(2, 1, 1), kParams);
    CHECK(fh.degree() == 1);
    CHECK(gh.degree() == 1);
    // 1F1(-1, b; x) = 1 - x/b contributes the linear coefficient.
    const auto en = energy(state(2, 1, 1), kParams);
    const double b = 2.0 * en.gamma_val + 1.0;
    const double kappa_term = 0.5 + 1.0 / en.alpha_val;
    CHECK_THAT(fh.coeffs[1],
               WithinRel(-kappa_term * 2.0 * en.alpha_val / b, 1e-13));
}

TEST_CASE("series and hypergeometric forms are proportional")
{
    for (const auto& qn : enumerate_states(3)) {
        if (qn.mu != abs(qn.kappa)) {
            continue;
        }
        const auto sol = build_radial(qn, kParams);
        const auto [fh, gh] = build_hypergeometric(qn, kParams);
        // Leading (highest-degree) coefficients: for kappa < 0 the low-order
        // coefficients are cancellation-tiny on both sides, so they cannot
        // anchor a 1e-12 comparison in doubles.
        const double c0 = fh.coeffs.back() / sol.a_coeffs.back();
        // Spec radii plus a 20-point log sweep; both components share c0.
        for (double r : {0.1, 1.0, 5.0, 10.0}) {
            const double fs = eval(coupled_amplitude(sol.F), r);
            const double gs = eval(coupled_amplitude(sol.G), r);
            CHECK_THAT(eval(fh, r), WithinRel(c0 * fs, 1e-12));
            CHECK_THAT(eval(gh, r), WithinRel(c0 * gs, 1e-12));
        }
        for (int k = 0; k < 20; ++k) {
            const double r = 0.05 * std::pow(400.0, k / 19.0);
            const double fs = eval(coupled_amplitude(sol.F), r);
            CHECK_THAT(eval(fh, r),
                       WithinAbs(c0 * fs, 1e-12 * std::abs(c0 * fs) + 1e-300));
        }
    }
}

TEST_CASE("1s amplitude evaluated both ways at r = 1")
{
    const auto sol = build_radial(state(1, 1, 1), kParams);
    const auto [fh, gh] = build_hypergeometric(state(1, 1, 1), kParams);
    const double c0 = fh.coeffs.front() / sol.a_coeffs.front();
    CHECK_THAT(eval(sol.F, 1.0) * c0, WithinRel(eval(fh, 1.0), 1e-13));
    CHECK_THAT(eval(sol.F, 1.0), WithinRel(0.541298942149264543, 1e-13));
}

TEST_CASE("radial residuals vanish on exact solutions")
{
    for (const auto& qn : enumerate_states(3)) {
        const auto sol = build_radial(qn, kParams);
        const double scale = std::max(max_abs_coeff(sol.F), max_abs_coeff(sol.G));
        const auto [eq1, eq2] = radial_residual(sol);
        CHECK(max_abs_coeff(eq1) < 1e-12 * scale);
        CHECK(max_abs_coeff(eq2) < 1e-12 * scale);
    }
}

TEST_CASE("residuals detect a perturbed energy")
{
    for (double offset : {1e-6, -1e-6}) {
        auto sol = build_radial(state(1, 1, 1), kParams);
        sol.energy.E += offset;
        // Rebuild amplitudes at the wrong energy.
        sol.energy.alpha_val = std::sqrt(-sol.energy.E *
                                         (2.0 + sol.lambda * sol.energy.E));
        const auto [a, b] = series_coefficients(sol.qn, sol.energy);
        sol.F = PolyExp(sol.energy.gamma_val - 0.5, sol.energy.alpha_val, a);
        sol.G = PolyExp(sol.energy.gamma_val - 0.5, sol.energy.alpha_val, b);
        const double scale = std::max(max_abs_coeff(sol.F), max_abs_coeff(sol.G));
        const auto [eq1, eq2] = radial_residual(sol);
        const double worst = std::max(max_abs_coeff(eq1), max_abs_coeff(eq2));
        CHECK(worst >= 1e-7 * scale);
    }
}

TEST_CASE("same-kappa solutions of different n are orthogonal")
{
    const int pairs[][4] = {{1, 1, 2, 1}, {1, 1, 3, 1}, {2, 1, 3, 1},
                            {2, -1, 3, -1}, {2, 3, 3, 3}};
    for (const auto& p : pairs) {
        const auto sol_a = build_radial(state(p[0], p[1], std::abs(p[1])), kParams);
        const auto sol_b = build_radial(state(p[2], p[3], std::abs(p[3])), kParams);
        const PolyExp fa = coupled_amplitude(sol_a.F);
        const PolyExp fb = coupled_amplitude(sol_b.F);
        const PolyExp ga = coupled_amplitude(sol_a.G);
        const PolyExp gb = coupled_amplitude(sol_b.G);
        const double overlap =
            moment(product(fa, fb)) + sol_a.lambda * moment(product(ga, gb));
        CHECK_THAT(overlap, WithinAbs(0.0, 1e-10));
    }
}

TEST_CASE("assemble_state lays out the four components by eta")
{
    // eta = +1: components 1 and 4.
    const auto up = assemble_state(build_radial(state(1, 1, 1), kParams));
    CHECK(up.components[0].weight == 1);
    CHECK(up.components[1].weight == 0);
    CHECK(up.components[2].weight == 0);
    CHECK(up.components[3].weight == 1);
    CHECK(up.components[0].phase_m == 0); // mu - 1/2
    CHECK(up.components[3].phase_m == 1); // mu + 1/2
    CHECK(!up.components[0].lower);
    CHECK(up.components[3].lower);

    // 2p_{1/2} with mu = +1/2 has eta = -1: components 2 and 3.
    const auto down = assemble_state(build_radial(state(2, -1, 1), kParams));
    CHECK(down.components[0].weight == 0);
    CHECK(down.components[1].weight == 1);
    CHECK(down.components[2].weight == 1);
    CHECK(down.components[3].weight == 0);
    CHECK(down.components[1].phase_m == 1); // mu + 1/2
    CHECK(down.components[2].phase_m == 0); // mu - 1/2

    CHECK_THROWS_AS(assemble_state(build_radial(state(1, 1, 1), kParams, false)),
                    DomainError);
}

TEST_CASE("constants of motion hold for every n <= 3 state")
{
    for (const auto& qn : enumerate_states(3)) {
        const auto report =
            check_constants_of_motion(assemble_state(build_radial(qn, kParams)));
        REQUIRE(report.checks.size() == 5);
        for (const auto& check : report.checks) {
            INFO(spectroscopic_label(qn) << ": " << check.name << " "
                                         << check.detail);
            CHECK(check.passed);
        }
        CHECK(qn.kappa.twice == qn.mu.twice * qn.eta);
    }
}

TEST_CASE("mutated layout is flagged by the P check")
{
    auto st = assemble_state(build_radial(state(1, 1, 1), kParams));
    // Swap f into the eta = -1 layout.
    st.components = {SpinorComponent{0, st.upper_phase, false},
                     SpinorComponent{1, st.lower_phase, false},
                     SpinorComponent{1, st.upper_phase, true},
                     SpinorComponent{0, st.lower_phase, true}};
    const auto report = check_constants_of_motion(st);
    CHECK(!report.all_passed());
    CHECK(report.checks[0].name == "P psi = eta psi");
    CHECK(!report.checks[0].passed);
}
