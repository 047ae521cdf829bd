// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dirac2d/magnetic.hpp"
#include "dirac2d/tables.hpp"

using namespace dirac2d;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const PhysicalParams kParams;

QuantumNumbers state(int n, int twice_kappa, int twice_mu)
{
    return validate_state(n, HalfInt{twice_kappa}, HalfInt{twice_mu});
}

double quad_shift(int n, int twice_kappa, int twice_mu)
{
    return shift_quadrature(build_radial(state(n, twice_kappa, twice_mu),
                                         kParams))
        .E1;
}

} // namespace

TEST_CASE("quadrature route reproduces the reference shifts")
{
    CHECK_THAT(quad_shift(1, 1, 1), WithinRel(0.499973372904998097, 1e-12));
    // The small entries cancel down from O(1) integrals; double precision
    // delivers them to ~2e-15 absolute, far below the 5e-10 table tolerance.
    CHECK_THAT(quad_shift(2, -1, 1), WithinAbs(-2.95856611049386283e-6, 1e-14));
    CHECK_THAT(quad_shift(3, -3, 3), WithinRel(0.499996804893805761, 1e-12));
    CHECK_THAT(quad_shift(3, 5, -5), WithinRel(-1.49999467485325762, 1e-12));
}

TEST_CASE("closed n' = 0 form")
{
    const auto one_s = shift_closed_n0(state(1, 1, 1), kParams);
    const double gamma = gamma_param(HalfInt{1}, kParams.lambda());
    CHECK_THAT(one_s.E1, WithinRel((2.0 * gamma + 1.0) / 4.0, 1e-15));
    CHECK_THAT(one_s.E1, WithinRel(0.499973372904998097, 1e-13));

    CHECK_THAT(shift_closed_n0(state(2, 3, 3), kParams).E1,
               WithinRel(0.999991124721820449, 1e-13));
    CHECK_THAT(shift_closed_n0(state(3, 5, 5), kParams).E1,
               WithinRel(1.49999467485325762, 1e-13));

    CHECK_THROWS_AS(shift_closed_n0(state(2, 1, 1), kParams), NotApplicable);

    // lambda -> 0 limit: (mu/4 kappa)(2 |kappa| + 1).
    PhysicalParams slow_light;
    slow_light.c = 1e9;
    CHECK_THAT(shift_closed_n0(state(2, 3, 3), slow_light).E1,
               WithinAbs(1.0, 1e-12));
    CHECK_THAT(shift_closed_n0(state(2, 3, -3), slow_light).E1,
               WithinAbs(-1.0, 1e-12));
}

TEST_CASE("appendix integrals: n' = 0 degenerate case")
{
    const auto sol = build_radial(state(1, 1, 1), kParams, false);
    const auto in = appendix_integrals(sol);
    CHECK(in.K2 == 0.0);
    CHECK(in.I2 == 0.0);
    CHECK(in.I12 == 0.0);
    CHECK(in.K1 > 0.0);
    CHECK(in.I1 > 0.0);

    // The integral form must reduce to the closed n' = 0 value exactly.
    const double kappa = 0.5;
    const double from_integrals = -(in.a * kappa + in.b) / (in.c * kappa + in.d);
    CHECK_THAT(from_integrals,
               WithinRel(shift_closed_n0(state(1, 1, 1), kParams).E1, 1e-12));
}

TEST_CASE("appendix integrals depend only on kappa^2 and n'")
{
    const auto plus = appendix_integrals(build_radial(state(3, 3, 3), kParams, false));
    const auto minus =
        appendix_integrals(build_radial(state(3, -3, 3), kParams, false));
    CHECK(plus.K1 == minus.K1);
    CHECK(plus.K2 == minus.K2);
    CHECK(plus.I1 == minus.I1);
    CHECK(plus.I2 == minus.I2);
    CHECK(plus.I12 == minus.I12);
    CHECK(plus.a == minus.a);
    CHECK(plus.b == minus.b);
    CHECK(plus.c == minus.c);
    CHECK(plus.d == minus.d);
}

TEST_CASE("closed general route reproduces the reference shifts")
{
    CHECK_THAT(shift_closed_general(state(2, 1, 1), kParams).E1,
               WithinRel(0.499997041433889506, 1e-12));
    CHECK_THAT(shift_closed_general(state(3, 3, 3), kParams).E1,
               WithinRel(0.999996804893805761, 1e-12));
    CHECK_THAT(shift_closed_general(state(3, -1, 1), kParams).E1,
               WithinAbs(-1.06506564884682227e-6, 1e-14));
    CHECK_THAT(shift_closed_general(state(3, 1, 1), kParams).E1,
               WithinRel(0.499998934934351153, 1e-12));
}

TEST_CASE("A1/A2 decomposition")
{
    const auto shift = shift_closed_general(state(2, 1, 1), kParams);
    CHECK_THAT(shift.E1, WithinRel(0.5 * shift.A1 + shift.A2, 1e-13));
    // A2 = 1/4 exactly; the identity behind the shift pair-sum split.
    CHECK_THAT(shift.A2, WithinAbs(0.25, 1e-12));

    const auto deep = shift_closed_general(state(3, -3, 3), kParams);
    CHECK_THAT(deep.A2, WithinAbs(0.25, 1e-12));
    CHECK_THAT(deep.E1, WithinRel(1.5 * deep.A1 - deep.A2, 1e-12));
}

TEST_CASE("shift pair-sum split: E1(kappa) - E1(-kappa) = 1/2")
{
    for (const auto& [n, abs2k] : {std::pair{2, 1}, {3, 1}, {3, 3}}) {
        const double plus = shift_closed_general(state(n, abs2k, abs2k), kParams).E1;
        const double minus =
            shift_closed_general(state(n, -abs2k, abs2k), kParams).E1;
        CHECK_THAT(plus - minus, WithinAbs(0.5, 1e-12));
    }
}

TEST_CASE("routes agree to 1e-12 on every n <= 3 state")
{
    for (const auto& qn : enumerate_states(3)) {
        const double closed = shift_closed(qn, kParams).E1;
        const double quad = shift_quadrature(build_radial(qn, kParams)).E1;
        INFO(spectroscopic_label(qn) << " mu = " << to_string(qn.mu));
        CHECK(std::abs(closed - quad) <= 1e-12 * std::max(1.0, std::abs(closed)));
        if (qn.n_prime == 0) {
            const double general = shift_closed_general(qn, kParams).E1;
            CHECK(std::abs(general - closed) <=
                  1e-12 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("E1 is exactly antisymmetric in mu")
{
    for (const auto& qn : enumerate_states(3)) {
        const auto flipped = validate_state(qn.n, qn.kappa, -qn.mu);
        CHECK(shift_closed(qn, kParams).E1 == -shift_closed(flipped, kParams).E1);
        CHECK(shift_quadrature(build_radial(qn, kParams)).E1 ==
              -shift_quadrature(build_radial(flipped, kParams)).E1);
    }
}

TEST_CASE("field lifts the degeneracy completely")
{
    for (int n = 2; n <= 3; ++n) {
        for (int abs2k = 1; abs2k <= 2 * n - 3; abs2k += 2) {
            std::vector<double> shifts;
            for (int sk : {+1, -1}) {
                for (int sm : {+1, -1}) {
                    shifts.push_back(
                        shift_closed(state(n, sk * abs2k, sm * abs2k), kParams).E1);
                }
            }
            for (std::size_t i = 0; i < shifts.size(); ++i) {
                for (std::size_t j = i + 1; j < shifts.size(); ++j) {
                    CHECK(shifts[i] != shifts[j]);
                }
            }
        }
    }
}

TEST_CASE("nonrelativistic shift values")
{
    CHECK(shift_nonrel(state(2, -1, 1)) == 0.0);  // m = 1, m_s = -1/2
    CHECK(shift_nonrel(state(2, 3, 3)) == 1.0);   // m = 1, m_s = +1/2
    CHECK(shift_nonrel(state(3, -3, 3)) == 0.5);  // m = 2, m_s = -1/2
    CHECK(shift_nonrel(state(1, 1, 1)) == 0.5);
    CHECK(shift_nonrel(state(1, 1, -1)) == -0.5);
}

TEST_CASE("shifts reach the nonrelativistic limit at c = 1e6")
{
    PhysicalParams slow_light;
    slow_light.c = 1e6;
    for (const auto& qn : enumerate_states(3)) {
        const double target = shift_nonrel(qn);
        CHECK_THAT(shift_closed(qn, slow_light).E1, WithinAbs(target, 1e-9));
        CHECK_THAT(shift_quadrature(build_radial(qn, slow_light)).E1,
                   WithinAbs(target, 1e-9));
    }
}

TEST_CASE("perturbed radial system coefficients")
{
    const auto qn = state(2, -1, 1);
    const auto op0 = perturbed_radial_system(qn, kParams, 0.0);
    const auto op = perturbed_radial_system(qn, kParams, 1e-3);

    for (double r : {0.2, 1.0, 7.5}) {
        // B = 0 reduces to the field-free coefficients.
        const auto v0 = op0.potential(r);
        const auto h0 = op0.h0(r);
        for (int k = 0; k < 4; ++k) {
            CHECK(v0[k] == h0[k]);
        }
        // h1 is purely off-diagonal with entries -eta r / 2.
        const auto h1 = op.h1(r);
        CHECK(h1[0] == 0.0);
        CHECK(h1[3] == 0.0);
        CHECK(h1[1] == -qn.eta * r / 2.0);
        CHECK(h1[2] == h1[1]);
        // eta enters only multiplying B.
        const auto v = op.potential(r);
        CHECK(v[1] == h0[1] + op.B * h1[1]);
        CHECK(v[0] == h0[0]);
        CHECK(v[3] == h0[3]);
    }
    const auto overlap = op.overlap();
    CHECK(overlap[0] == 1.0);
    CHECK(overlap[1] == 0.0);
    CHECK(overlap[2] == 0.0);
    CHECK(overlap[3] == kParams.lambda());
}
