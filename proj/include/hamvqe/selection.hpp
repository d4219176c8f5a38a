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
#include <functional>
#include <span>
#include <vector>

#include "hamvqe/ansatz.hpp"
#include "hamvqe/pauli.hpp"
#include "hamvqe/vqe.hpp"

namespace hamvqe {

/// Chemical accuracy, 1.6 mHa.
inline constexpr double kChemicalAccuracy = 1.6e-3;

struct SelectionRound {
    std::size_t chosen_term_index = 0;
    PauliString chosen_pauli;
    double best_energy = 0.0;
    double energy_gap_to_exact = 0.0;
    std::size_t candidates_evaluated = 0;
    /// Optimizer evaluations spent on the whole round.
    std::size_t evaluations = 0;
    /// Optimal parameters of the ansatz after this round.
    ParameterVector params;
};

struct SelectionHistory {
    Family family = Family::ImagTime;
    std::size_t layers = 1;
    double target_gap = kChemicalAccuracy;
    double exact_energy = 0.0;
    double hf_energy = 0.0;
    std::vector<SelectionRound> rounds;
    /// Final gap reached target_gap.
    bool converged = false;
    /// Stopped because no eligible candidate was left.
    bool exhausted = false;
    /// Total number of vqe minimize() calls.
    std::size_t minimize_calls = 0;

    std::vector<std::size_t> selected() const;
};

struct SelectionConfig {
    OptimizerConfig optimizer{.restarts = 1};
    /// Skip I/Z-only terms for the QaoaInspired family too (they are always
    /// ineligible for ImagTime).
    bool prune_diagonal = true;
    /// Keep earlier rounds' parameters fixed and optimize only the new term's.
    bool freeze_previous = false;
    /// Candidate energies closer than this count as a tie (lower index wins).
    double tie_tolerance = 1e-9;
    /// Worker threads across candidates.
    std::size_t jobs = 1;
    /// Called after each completed round.
    std::function<void(const SelectionRound &)> on_round;
};

/// Indices that may be added next: not yet selected, not the identity, and
/// not I/Z-only when the family (or `prune_diagonal`) excludes them. Sorted by
/// descending |h_j|, then by index.
std::vector<std::size_t> eligible_candidates(const QubitHamiltonian &h, Family family,
                                             std::span<const std::size_t> already_selected,
                                             bool prune_diagonal = true);

/// Greedy term selection. Each round re-optimizes every eligible extension of
/// the current selection (warm-started from the previous optimum, new angles
/// zero) and keeps the lowest energy. Stops once the gap to `exact_energy`
/// is at most `target_gap`, after `max_terms` rounds, or when no candidates
/// remain.
SelectionHistory greedy_select(const QubitHamiltonian &h, Family family, std::size_t layers,
                               double target_gap, std::size_t max_terms, double exact_energy,
                               const SelectionConfig &config = {});

}  // namespace hamvqe
