// Copyright 2026 The hamvqe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hamvqe/error.hpp"
#include "hamvqe/oracle.hpp"
#include "test_support.hpp"

namespace hamvqe {
namespace {

using namespace hamvqe::testing;

TEST(ExactGround, SingleZString) {
    const QubitHamiltonian h("z", 3, {{-0.7, PauliString::parse("ZZZ")}}, "000");
    EXPECT_NEAR(exact_ground(h).ground_energy, -0.7, 1e-12);
    const QubitHamiltonian g("z", 3, {{0.4, PauliString::parse("ZIZ")}}, "000");
    EXPECT_NEAR(exact_ground(g).ground_energy, -0.4, 1e-12);
}

TEST(ExactGround, MatchesDenseOnRandomHamiltonians) {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const QubitHamiltonian h = random_hamiltonian(n, 10 + trial, rng);
        const auto r = exact_ground(h);
        EXPECT_NEAR(r.ground_energy, dense_ground(dense(h)), 1e-10) << "n=" << n;
        EXPECT_LT(r.residual_norm, 1e-8);
    }
}

TEST(ExactGround, ResidualIsHonest) {
    for (const QubitHamiltonian *h : {&h2(), &lih(), &h2o()}) {
        const auto r = exact_ground(*h);
        const PauliSumOperator op(*h);
        std::vector<Complex> hv(r.ground_state.dim());
        op.apply(r.ground_state.amplitudes(), hv);
        double s = 0.0;
        for (std::size_t i = 0; i < hv.size(); ++i) {
            s += std::norm(hv[i] - r.ground_energy * r.ground_state[i]);
        }
        EXPECT_NEAR(std::sqrt(s), r.residual_norm, 1e-12);
        EXPECT_LT(r.residual_norm, 1e-8);
        EXPECT_NEAR(r.ground_state.norm(), 1.0, 1e-12);
        EXPECT_NEAR(r.ground_energy, h->exact_energy(), 1e-8) << h->name();
    }
}

TEST(ExactGround, H2MatchesDense4x4) {
    EXPECT_NEAR(exact_ground(h2()).ground_energy, dense_ground(dense(h2())), 1e-12);
}

TEST(ExactGround, ReportsNonConvergence) {
    std::mt19937_64 rng(51);
    const QubitHamiltonian h = random_hamiltonian(8, 60, rng);
    LanczosOptions o;
    o.max_iterations = 3;
    try {
        exact_ground(h, o);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError &e) {
        EXPECT_NE(std::string(e.what()).find("best residual"), std::string::npos);
    }
}

TEST(ExactGround, RestartsUnderSmallMemoryCap) {
    std::mt19937_64 rng(52);
    const QubitHamiltonian h = random_hamiltonian(7, 40, rng);
    LanczosOptions o;
    o.max_basis_bytes = 12 * (std::size_t{1} << 7) * sizeof(Complex);
    o.max_iterations = 3000;
    EXPECT_NEAR(exact_ground(h, o).ground_energy, dense_ground(dense(h)), 1e-10);
}

TEST(ImaginaryTime, SingleTermClosedForm) {
    const StateVector start = prepare_basis_state("10");
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const StateVector s = imaginary_time_evolve(PauliString::parse("XX"), t, start);
        const double d = std::sqrt(std::cosh(t) * std::cosh(t) + std::sinh(t) * std::sinh(t));
        EXPECT_NEAR(std::abs(s[1] - std::cosh(t) / d), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(s[2] + std::sinh(t) / d), 0.0, 1e-14);
    }
    EXPECT_THROW(imaginary_time_evolve(PauliString::parse("XX"), -0.1, start), ValidationError);
}

TEST(ImaginaryTime, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(53);
    const StateVector s = random_state(3, rng);
    EXPECT_LT(max_diff(imaginary_time_evolve(PauliString::parse("XYZ"), 0.0, s), s), 1e-15);
    const QubitHamiltonian h = random_hamiltonian(3, 6, rng);
    EXPECT_EQ(imaginary_time_evolve(h, 0.0, s), s);
}

TEST(ImaginaryTime, H2ConvergesToGroundEnergy) {
    const auto &h = h2();
    const StateVector hf = prepare_basis_state(h.hf_bitstring());
    const double e0 = exact_ground(h).ground_energy;
    const StateVector s = imaginary_time_evolve(h, 10.0, hf, 1e-3);
    EXPECT_NEAR(expectation(s, h), e0, 1e-6);
    // The first-order splitting biases the fixed point by O(dt).
    const double coarse = expectation(imaginary_time_evolve(h, 10.0, hf), h) - e0;
    EXPECT_GT(coarse, 0.0);
    EXPECT_LT(coarse, 1e-5);
}

TEST(ImaginaryTime, EnergyNonIncreasing) {
    for (const QubitHamiltonian *h : {&h2(), &lih()}) {
        StateVector s = prepare_basis_state(h->hf_bitstring());
        double prev = expectation(s, *h);
        for (int k = 0; k < 40; ++k) {
            s = imaginary_time_evolve(*h, 0.05, s);
            const double e = expectation(s, *h);
            EXPECT_LE(e, prev + 1e-12) << h->name() << " step " << k;
            prev = e;
        }
    }
}

TEST(ImaginaryTime, Validation) {
    const auto &h = h2();
    EXPECT_THROW(imaginary_time_evolve(h, 1.0, StateVector(3)), DimensionMismatchError);
    EXPECT_THROW(imaginary_time_evolve(h, 1.0, StateVector(2), 0.0), ValidationError);
}

TEST(Fig3, ClosedFormsAtEveryPoint) {
    std::vector<double> grid;
    for (int k = 0; k <= 200; ++k) {
        grid.push_back(3.0 * k / 200);
    }
    for (const auto &r : fig3_amplitudes(grid)) {
        const double c2 = std::cosh(r.t) * std::cosh(r.t);
        const double s2 = std::sinh(r.t) * std::sinh(r.t);
        EXPECT_NEAR(r.a_xx2, c2 / (c2 + s2), 1e-12);
        EXPECT_NEAR(r.b_xx2, s2 / (c2 + s2), 1e-12);
        EXPECT_NEAR(r.a_xy2, std::cos(r.t) * std::cos(r.t), 1e-12);
        EXPECT_NEAR(r.b_xy2, std::sin(r.t) * std::sin(r.t), 1e-12);
        EXPECT_NEAR(r.a_xx2 + r.b_xx2, 1.0, 1e-15);
        EXPECT_NEAR(r.a_xy2 + r.b_xy2, 1.0, 1e-15);
    }
}

TEST(Fig3, Landmarks) {
    const std::vector<double> grid{0.0, std::numbers::pi / 4, 30.0};
    const auto rows = fig3_amplitudes(grid);
    EXPECT_EQ(rows[0].a_xx2, 1.0);
    EXPECT_EQ(rows[0].b_xx2, 0.0);
    EXPECT_EQ(rows[0].a_xy2, 1.0);
    EXPECT_EQ(rows[0].b_xy2, 0.0);
    EXPECT_NEAR(rows[1].a_xy2, 0.5, 1e-15);
    EXPECT_NEAR(rows[1].b_xy2, 0.5, 1e-15);
    EXPECT_NEAR(rows[2].a_xx2, 0.5, 1e-12);
    EXPECT_NEAR(rows[2].b_xx2, 0.5, 1e-12);
}

}  // namespace
}  // namespace hamvqe
