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

#include "hamvqe/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hamvqe/error.hpp"
#include "hamvqe/statevector.hpp"

namespace hamvqe::cli {
namespace {

using nlohmann::json;

bool all_digits(const std::string &s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

json rounded(std::span<const double> xs) {
    json out = json::array();
    for (double x : xs) {
        out.push_back(report_value(x));
    }
    return out;
}

json term_names(const QubitHamiltonian &h, std::span<const std::size_t> idx) {
    json out = json::array();
    for (std::size_t j : idx) {
        out.push_back(h.term(j).pauli.str());
    }
    return out;
}

double hf_energy(const QubitHamiltonian &h) {
    return expectation(prepare_basis_state(h.hf_bitstring()), h);
}

json counts_json(GateCounts c) {
    return {{"one_qubit", c.one_qubit}, {"two_qubit", c.two_qubit}};
}

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

double report_value(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(format12(x).c_str(), nullptr);
}

std::vector<std::size_t> resolve_terms(const QubitHamiltonian &h,
                                       const std::vector<std::string> &tokens) {
    std::vector<std::size_t> out;
    out.reserve(tokens.size());
    for (const std::string &tok : tokens) {
        if (all_digits(tok)) {
            std::size_t j = 0;
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), j);
            if (res.ec != std::errc{} || j >= h.size()) {
                throw UnknownTermError("term index " + tok + " out of range (the Hamiltonian has " +
                                       std::to_string(h.size()) + " terms)");
            }
            out.push_back(j);
            continue;
        }
        const PauliString p = PauliString::parse(tok);
        if (p.n_qubits() != h.n_qubits()) {
            throw UnknownTermError("term " + tok + " has " + std::to_string(p.n_qubits()) +
                                   " qubits, the Hamiltonian has " +
                                   std::to_string(h.n_qubits()));
        }
        const std::ptrdiff_t j = h.find(p);
        if (j < 0) {
            throw UnknownTermError("term " + tok + " does not appear in " + h.name());
        }
        out.push_back(static_cast<std::size_t>(j));
    }
    return out;
}

double reference_energy(const QubitHamiltonian &h) {
    if (h.has_exact_energy()) {
        return h.exact_energy();
    }
    return exact_ground(h).ground_energy;
}

json cmd_exact(const QubitHamiltonian &h, const LanczosOptions &options) {
    const SpectrumResult r = exact_ground(h, options);
    json out = {
        {"command", "exact"},
        {"name", h.name()},
        {"n_qubits", h.n_qubits()},
        {"n_terms", h.size()},
        {"ground_energy", report_value(r.ground_energy)},
        {"residual", r.residual_norm},
        {"lanczos_iterations", r.iterations},
        {"hf_energy", report_value(hf_energy(h))},
    };
    if (h.has_exact_energy()) {
        out["metadata_exact_energy"] = report_value(h.exact_energy());
        out["metadata_difference"] = r.ground_energy - h.exact_energy();
    }
    return out;
}

json cmd_solve(const QubitHamiltonian &h, const SolveOptions &options) {
    const AnsatzSpec spec(options.family, resolve_terms(h, options.terms), options.layers, h);
    const PauliSumOperator op(h);
    const OptimizationResult r = minimize(spec, h, op, options.optimizer);
    const double exact = reference_energy(h);
    return {
        {"command", "solve"},
        {"name", h.name()},
        {"family", family_name(options.family)},
        {"layers", options.layers},
        {"terms", term_names(h, spec.selected())},
        {"parameter_count", spec.parameter_count()},
        {"best_energy", report_value(r.best_energy)},
        {"exact_energy", report_value(exact)},
        {"gap", report_value(r.best_energy - exact)},
        {"params", rounded(r.best_params)},
        {"evaluations", r.evaluations},
        {"converged", r.converged},
        {"restarts", r.restarts_used},
        {"best_restart", r.best_restart},
        {"seed", options.optimizer.seed},
    };
}

std::string history_table(const SelectionHistory &history) {
    std::string out = "K\tpauli\tenergy\tgap\n";
    out += "0\t-\t" + format12(history.hf_energy) + "\t" +
           format12(history.hf_energy - history.exact_energy) + "\n";
    for (std::size_t k = 0; k < history.rounds.size(); ++k) {
        const SelectionRound &r = history.rounds[k];
        out += std::to_string(k + 1) + "\t" + r.chosen_pauli.str() + "\t" +
               format12(r.best_energy) + "\t" + format12(r.energy_gap_to_exact) + "\n";
    }
    return out;
}

SelectOutput cmd_select(const QubitHamiltonian &h, const SelectOptions &options) {
    const double exact = reference_energy(h);
    const std::size_t max_terms = options.max_terms == 0 ? h.size() : options.max_terms;
    const SelectionHistory hist = greedy_select(h, options.family, options.layers,
                                                options.target_gap, max_terms, exact,
                                                options.selection);
    json rounds = json::array();
    for (const SelectionRound &r : hist.rounds) {
        rounds.push_back({
            {"term_index", r.chosen_term_index},
            {"pauli", r.chosen_pauli.str()},
            {"energy", report_value(r.best_energy)},
            {"gap", report_value(r.energy_gap_to_exact)},
            {"candidates", r.candidates_evaluated},
            {"evaluations", r.evaluations},
        });
    }
    const std::vector<std::size_t> chosen = hist.selected();
    json report = {
        {"command", "select"},
        {"name", h.name()},
        {"family", family_name(options.family)},
        {"layers", options.layers},
        {"target_gap", options.target_gap},
        {"exact_energy", report_value(exact)},
        {"hf_energy", report_value(hist.hf_energy)},
        {"K", hist.rounds.size()},
        {"selected", term_names(h, chosen)},
        {"final_energy",
         report_value(hist.rounds.empty() ? hist.hf_energy : hist.rounds.back().best_energy)},
        {"final_gap", report_value(hist.rounds.empty() ? hist.hf_energy - exact
                                                       : hist.rounds.back().energy_gap_to_exact)},
        {"converged", hist.converged},
        {"exhausted", hist.exhausted},
        {"minimize_calls", hist.minimize_calls},
        {"rounds", rounds},
    };
    if (!hist.rounds.empty()) {
        report["params"] = rounded(hist.rounds.back().params);
    }
    return {report, history_table(hist)};
}

CompileOutput cmd_compile(const QubitHamiltonian &h, const CompileOptions &options) {
    const AnsatzSpec spec(options.family, resolve_terms(h, options.terms), options.layers, h);
    ParameterVector params(spec.parameter_count(), 0.0);
    if (options.angles.size() == 1) {
        std::fill(params.begin(), params.end(), options.angles.front());
    } else if (!options.angles.empty()) {
        if (options.angles.size() != params.size()) {
            throw ValidationError("expected " + std::to_string(params.size()) +
                                  " angles (or one to broadcast), got " +
                                  std::to_string(options.angles.size()));
        }
        params = options.angles;
    }
    const GateCircuit c = compile_ansatz(spec, params, h, options.z_in_software);
    const GateCounts bound =
        ansatz_count_bound(options.family, h.n_qubits(), spec.term_count(), options.layers);
    json report = {
        {"command", "compile"},
        {"name", h.name()},
        {"family", family_name(options.family)},
        {"layers", options.layers},
        {"terms", term_names(h, spec.selected())},
        {"z_in_software", options.z_in_software},
        {"counts", counts_json(c.counts())},
        {"bound", counts_json(bound)},
    };
    return {report, export_circuit(c)};
}

CompileOutput cmd_compile_pauli(const PauliString &p, double angle) {
    const GateCircuit c = compile_pauli_exp(p, angle);
    json report = {
        {"command", "compile"},
        {"pauli", p.str()},
        {"angle", angle},
        {"counts", counts_json(c.counts())},
    };
    return {report, export_circuit(c)};
}

std::string cmd_fig3(double t_min, double t_max, std::size_t steps) {
    if (steps == 0) {
        throw ValidationError("fig3 needs at least one grid point");
    }
    if (!(t_max >= t_min)) {
        throw ValidationError("fig3 needs t_max >= t_min");
    }
    if (steps == 1 && t_max != t_min) {
        throw ValidationError("a single grid point needs t_min == t_max");
    }
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = steps == 1 ? t_min
                             : t_min + (t_max - t_min) * static_cast<double>(i) /
                                           static_cast<double>(steps - 1);
    }
    std::string out = "t,a_xx2,b_xx2,a_xy2,b_xy2\n";
    char buf[160];
    for (const Fig3Row &r : fig3_amplitudes(grid)) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.a_xx2, r.b_xx2,
                      r.a_xy2, r.b_xy2);
        out += buf;
    }
    return out;
}

}  // namespace hamvqe::cli
