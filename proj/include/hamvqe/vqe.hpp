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
#include <optional>
#include <span>
#include <vector>

#include "hamvqe/ansatz.hpp"
#include "hamvqe/pauli.hpp"
#include "hamvqe/statevector.hpp"

namespace hamvqe {

struct OptimizerConfig {
    std::uint64_t seed = 7;
    /// Restart 0 starts from the supplied point (all zeros by default, i.e.
    /// the Hartree-Fock state); the others draw uniformly from
    /// [-restart_range, restart_range].
    std::size_t restarts = 5;
    /// Simplex energy spread at convergence (Hartree).
    double tol = 1e-9;
    /// Simplex extent at convergence (radians).
    double xtol = 1e-6;
    /// Evaluation budget per restart.
    std::size_t max_evals = 20000;
    double initial_step = 0.1;
    double restart_range = 0.25;
    /// Polish the best simplex result with BFGS on parameter-shift gradients.
    bool gradient_refinement = false;
    std::size_t jobs = 1;
};

struct OptimizationResult {
    /// Optimized angles reduced to [-pi/2, pi/2) (a shift by pi is a global sign).
    ParameterVector best_params;
    double best_energy = 0.0;
    /// Objective evaluations summed over all restarts (and refinement).
    std::size_t evaluations = 0;
    bool converged = false;
    std::size_t restarts_used = 0;
    /// Restart that produced best_energy.
    std::size_t best_restart = 0;
};

/// Energy of an ansatz as a function of its parameters. Owns its workspace,
/// so one instance per thread.
class EnergyObjective {
  public:
    EnergyObjective(const AnsatzSpec &spec, const PauliSumOperator &op, const StateVector &start);

    /// Throws NumericalError for a non-finite energy.
    double operator()(std::span<const double> params);

    const AnsatzSpec &spec() const noexcept { return spec_; }

  private:
    const AnsatzSpec &spec_;
    const PauliSumOperator &op_;
    const StateVector &start_;
    StateVector work_;
};

/// Multistart Nelder-Mead minimization of <psi(theta)|H|psi(theta)>.
/// Deterministic for a fixed config.seed regardless of config.jobs.
OptimizationResult minimize(const AnsatzSpec &spec, const QubitHamiltonian &h,
                            const OptimizerConfig &config);

/// As above with a prebuilt operator and an optional start point for restart 0.
/// When `free` is non-empty only those parameter indices vary; the rest stay
/// at their `initial` values (zero without one).
OptimizationResult minimize(const AnsatzSpec &spec, const QubitHamiltonian &h,
                            const PauliSumOperator &op, const OptimizerConfig &config,
                            std::optional<std::span<const double>> initial = std::nullopt,
                            std::span<const std::size_t> free = {});

/// Exact parameter-shift gradient: dE/dtheta_m = E(theta_m + pi/4) - E(theta_m - pi/4),
/// valid because every generator squares to the identity.
std::vector<double> gradient(const AnsatzSpec &spec, std::span<const double> params,
                             const QubitHamiltonian &h);
std::vector<double> gradient(EnergyObjective &objective, std::span<const double> params);

}  // namespace hamvqe
