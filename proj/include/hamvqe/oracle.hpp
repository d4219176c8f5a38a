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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hamvqe/pauli.hpp"
#include "hamvqe/statevector.hpp"

namespace hamvqe {

struct SpectrumResult {
    double ground_energy = 0.0;
    StateVector ground_state{1};
    /// ||H psi - E psi|| of the returned pair, recomputed explicitly.
    double residual_norm = 0.0;
    std::size_t iterations = 0;
};

struct LanczosOptions {
    /// Total matrix-vector products allowed.
    std::size_t max_iterations = 300;
    double tolerance = 1e-9;
    std::uint64_t seed = 11;
    /// Krylov basis memory cap in bytes; the method restarts from the
    /// current Ritz vector when the basis would exceed it.
    std::size_t max_basis_bytes = std::size_t{1} << 28;
};

/// Lowest eigenpair by Lanczos with full reorthogonalization, matrix-free.
/// Throws NumericalError (message carries the best residual) if the residual
/// does not drop below `tolerance` within the iteration budget.
SpectrumResult exact_ground(const PauliSumOperator &op, const LanczosOptions &options = {});
SpectrumResult exact_ground(const QubitHamiltonian &h, const LanczosOptions &options = {});

/// (cosh t - sinh t P)|start>, renormalized. Requires t >= 0.
StateVector imaginary_time_evolve(const PauliString &p, double t, const StateVector &start);

/// First-order Trotterized exp(-t H)|start> with steps of at most `dt`,
/// renormalized after every step.
StateVector imaginary_time_evolve(const QubitHamiltonian &h, double t, const StateVector &start,
                                  double dt = 0.01);

/// Squared, renormalized amplitudes of the two-qubit example: imaginary-time
/// evolution in XX versus real-time evolution in its X<->Y substitute, both
/// started from |10>.
struct Fig3Row {
    double t;
    double a_xx2;  ///< |<10|psi_xx(t)>|^2
    double b_xx2;  ///< |<01|psi_xx(t)>|^2
    double a_xy2;
    double b_xy2;
};

std::vector<Fig3Row> fig3_amplitudes(std::span<const double> t_grid);

}  // namespace hamvqe
