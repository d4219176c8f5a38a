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
#include <string>
#include <vector>

#include "hamvqe/ansatz.hpp"
#include "hamvqe/compiler.hpp"
#include "hamvqe/oracle.hpp"
#include "hamvqe/pauli.hpp"
#include "hamvqe/selection.hpp"
#include "hamvqe/vqe.hpp"
#include "json.hpp"

// Implementations of the hamvqe subcommands. Each returns a JSON report; the
// executable only parses flags, prints and maps errors to exit codes.
namespace hamvqe::cli {

/// Rounds to 12 significant digits, the precision used in every report.
double report_value(double x);

/// Resolves each token to a term index. A token is either a decimal index or
/// a Pauli string. Throws UnknownTermError when a token names no term.
std::vector<std::size_t> resolve_terms(const QubitHamiltonian &h,
                                       const std::vector<std::string> &tokens);

/// metadata["exact_energy"] when present, otherwise the Lanczos ground energy.
double reference_energy(const QubitHamiltonian &h);

nlohmann::json cmd_exact(const QubitHamiltonian &h, const LanczosOptions &options = {});

struct SolveOptions {
    Family family = Family::QaoaInspired;
    std::vector<std::string> terms;
    std::size_t layers = 1;
    OptimizerConfig optimizer;
};

nlohmann::json cmd_solve(const QubitHamiltonian &h, const SolveOptions &options);

struct SelectOptions {
    Family family = Family::ImagTime;
    std::size_t layers = 1;
    double target_gap = kChemicalAccuracy;
    /// 0 means every term.
    std::size_t max_terms = 0;
    SelectionConfig selection;
};

struct SelectOutput {
    nlohmann::json report;
    /// Tab-separated "K pauli energy gap" rows, K = 0 being the HF state.
    std::string history;
};

SelectOutput cmd_select(const QubitHamiltonian &h, const SelectOptions &options);

/// Tab-separated history table of a selection run.
std::string history_table(const SelectionHistory &history);

struct CompileOptions {
    Family family = Family::QaoaInspired;
    std::vector<std::string> terms;
    std::size_t layers = 1;
    /// One value per parameter, or a single value broadcast to all of them.
    /// Empty means all zeros.
    std::vector<double> angles;
    bool z_in_software = true;
};

struct CompileOutput {
    nlohmann::json report;
    std::string circuit;
};

/// Compiles the ansatz of `h` for the named terms.
CompileOutput cmd_compile(const QubitHamiltonian &h, const CompileOptions &options);

/// Compiles exp(-i angle P) for a bare Pauli string.
CompileOutput cmd_compile_pauli(const PauliString &p, double angle);

/// CSV with header "t,a_xx2,b_xx2,a_xy2,b_xy2" over `steps` evenly spaced points.
std::string cmd_fig3(double t_min, double t_max, std::size_t steps);

}  // namespace hamvqe::cli
