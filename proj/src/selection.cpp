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

#include "hamvqe/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamvqe/error.hpp"
#include "hamvqe/parallel.hpp"

namespace hamvqe {

std::vector<std::size_t> SelectionHistory::selected() const {
    std::vector<std::size_t> out;
    out.reserve(rounds.size());
    for (const auto &r : rounds) {
        out.push_back(r.chosen_term_index);
    }
    return out;
}

std::vector<std::size_t> eligible_candidates(const QubitHamiltonian &h, Family family,
                                             std::span<const std::size_t> already_selected,
                                             bool prune_diagonal) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < h.size(); ++j) {
        const PauliString &p = h.term(j).pauli;
        if (std::find(already_selected.begin(), already_selected.end(), j) !=
            already_selected.end()) {
            continue;
        }
        if (p.weight() == 0) {
            continue;
        }
        if (p.is_diagonal() && (family == Family::ImagTime || prune_diagonal)) {
            continue;
        }
        out.push_back(j);
    }
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(h.term(a).coeff) > std::abs(h.term(b).coeff);
    });
    return out;
}

SelectionHistory greedy_select(const QubitHamiltonian &h, Family family, std::size_t layers,
                               double target_gap, std::size_t max_terms, double exact_energy,
                               const SelectionConfig &config) {
    if (!(target_gap > 0.0)) {
        throw ValidationError("target gap must be positive");
    }
    if (max_terms > h.size()) {
        throw ValidationError("max_terms " + std::to_string(max_terms) +
                              " exceeds the number of terms " + std::to_string(h.size()));
    }

    SelectionHistory history;
    history.family = family;
    history.layers = layers;
    history.target_gap = target_gap;
    history.exact_energy = exact_energy;

    const PauliSumOperator op(h);
    std::vector<std::size_t> selected;
    AnsatzSpec current(family, selected, layers, h);
    ParameterVector params;
    {
        auto base = minimize(current, h, op, config.optimizer);
        history.hf_energy = base.best_energy;
    }
    double energy = history.hf_energy;
    if (energy - exact_energy <= target_gap) {
        history.converged = true;
        return history;
    }

    OptimizerConfig inner = config.optimizer;
    inner.jobs = 1;

    while (selected.size() < max_terms) {
        const auto candidates =
            eligible_candidates(h, family, selected, config.prune_diagonal);
        if (candidates.empty()) {
            history.exhausted = true;
            break;
        }

        std::vector<OptimizationResult> results(candidates.size());
        parallel_for(candidates.size(), config.jobs, [&](std::size_t c) {
            std::vector<std::size_t> trial_sel = selected;
            trial_sel.push_back(candidates[c]);
            AnsatzSpec trial(family, std::move(trial_sel), layers, h);
            const ParameterVector warm = extend_parameters(current, params, trial);
            std::vector<std::size_t> free;
            if (config.freeze_previous) {
                const std::size_t k = trial.term_count() - 1;
                for (std::size_t l = 0; l < layers; ++l) {
                    for (std::size_t i = 0; i < trial.block_size(); ++i) {
                        free.push_back(trial.block_offset(l, k) + i);
                    }
                }
            }
            results[c] = minimize(trial, h, op, inner, std::span<const double>(warm), free);
        });
        history.minimize_calls += candidates.size();

        std::size_t best = 0;
        std::size_t evaluations = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            evaluations += results[c].evaluations;
            const double diff = results[c].best_energy - results[best].best_energy;
            if (diff < -config.tie_tolerance ||
                (std::abs(diff) <= config.tie_tolerance && candidates[c] < candidates[best])) {
                best = c;
            }
        }

        selected.push_back(candidates[best]);
        current = AnsatzSpec(family, selected, layers, h);
        params = std::move(results[best].best_params);
        energy = results[best].best_energy;

        SelectionRound round;
        round.chosen_term_index = candidates[best];
        round.chosen_pauli = h.term(candidates[best]).pauli;
        round.best_energy = energy;
        round.energy_gap_to_exact = energy - exact_energy;
        round.candidates_evaluated = candidates.size();
        round.evaluations = evaluations;
        round.params = params;
        history.rounds.push_back(round);
        if (config.on_round) {
            config.on_round(history.rounds.back());
        }

        if (round.energy_gap_to_exact <= target_gap) {
            history.converged = true;
            break;
        }
    }
    return history;
}

}  // namespace hamvqe
