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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hamvqe/pauli.hpp"

namespace hamvqe {

/// Hamiltonian file format (JSON, UTF-8):
///
///   {
///    "name": "h2_0.735",
///    "n_qubits": 2,
///    "hf_bitstring": "10",
///    "terms": [
///     {"coeff": -0.33240425132387996, "pauli": "II"},
///     ...
///    ],
///    "metadata": {"exact_energy": ..., "geometry": ..., "basis": ...,
///                 "mapping": ..., "symmetry_ops": [...]}
///   }
///
/// Character k of "pauli" and of "hf_bitstring" refers to qubit k (bit k of
/// the basis index). "coeff" is a decimal, or a [re, im] pair whose imaginary
/// part must not exceed 1e-12 in magnitude. Repeated Pauli strings are
/// summed. Errors report 1-based line and column.
QubitHamiltonian parse_hamiltonian(std::string_view text, std::string_view source = "<input>");
QubitHamiltonian load_hamiltonian(const std::filesystem::path &path);

/// Writes coefficients with 17 significant digits; parse(save(h)) == h.
std::string save_hamiltonian(const QubitHamiltonian &h);
void save_hamiltonian(const QubitHamiltonian &h, const std::filesystem::path &path);

/// Operators listed under metadata["symmetry_ops"] (e.g. particle number),
/// each as {"name": ..., "terms": [{"coeff", "pauli"}, ...]}.
struct NamedOperator {
    std::string name;
    std::vector<WeightedTerm> terms;
};

std::vector<NamedOperator> symmetry_operators(const QubitHamiltonian &h);

}  // namespace hamvqe
