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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hamvqe {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p) noexcept;

/// A tensor product of single-qubit Pauli operators.
///
/// Qubit convention (shared by every module): character k of the textual
/// form acts on qubit k, and qubit k is bit k of a basis-state index, so
/// qubit 0 is the least-significant bit.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> word);

    /// Parses a word over {I,X,Y,Z}. Throws ParseError naming the first bad position.
    static PauliString parse(std::string_view text);

    std::size_t n_qubits() const noexcept { return word_.size(); }
    Pauli operator[](std::size_t qubit) const { return word_[qubit]; }
    std::span<const Pauli> word() const noexcept { return word_; }

    std::string str() const;

    /// Number of non-identity symbols.
    std::size_t weight() const noexcept;
    std::size_t count(Pauli p) const noexcept;

    /// True when the string contains only I and Z.
    bool is_diagonal() const noexcept;

    /// Bit k set where qubit k carries X or Y (the basis-index flip pattern).
    std::uint64_t x_mask() const;
    /// Bit k set where qubit k carries Y or Z (positions contributing a sign).
    std::uint64_t z_mask() const;

    bool operator==(const PauliString &) const = default;
    auto operator<=>(const PauliString &) const = default;

  private:
    std::vector<Pauli> word_;
};

/// Lowest-index X becomes Y; with no X present, the lowest-index Y becomes X.
/// Throws NotSubstitutableError for strings made only of I and Z.
PauliString xy_substitute(const PauliString &p);

inline std::size_t weight(const PauliString &p) noexcept { return p.weight(); }

struct WeightedTerm {
    double coeff = 0.0;
    PauliString pauli;

    bool operator==(const WeightedTerm &) const = default;
};

/// h = sum_j coeff_j * pauli_j, with a computational-basis reference
/// (Hartree-Fock) state.
class QubitHamiltonian {
  public:
    QubitHamiltonian() = default;

    /// Validates and normalizes: every term must act on `n_qubits`, coefficients
    /// must be finite, repeated Pauli strings are merged (first occurrence keeps
    /// its position) and counted in `merged_duplicates()`.
    QubitHamiltonian(std::string name, std::size_t n_qubits, std::vector<WeightedTerm> terms,
                     std::string hf_bitstring, nlohmann::json metadata = nlohmann::json::object());

    const std::string &name() const noexcept { return name_; }
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::span<const WeightedTerm> terms() const noexcept { return terms_; }
    const WeightedTerm &term(std::size_t j) const { return terms_.at(j); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::string &hf_bitstring() const noexcept { return hf_bitstring_; }
    const nlohmann::json &metadata() const noexcept { return metadata_; }
    std::size_t merged_duplicates() const noexcept { return merged_duplicates_; }

    /// Index of the term with this Pauli string, or -1.
    std::ptrdiff_t find(const PauliString &p) const noexcept;

    /// Value of metadata["exact_energy"] when present.
    bool has_exact_energy() const;
    double exact_energy() const;

    bool operator==(const QubitHamiltonian &other) const;

  private:
    std::string name_;
    std::size_t n_qubits_ = 0;
    std::vector<WeightedTerm> terms_;
    std::string hf_bitstring_;
    nlohmann::json metadata_ = nlohmann::json::object();
    std::size_t merged_duplicates_ = 0;
};

/// Validates a bitstring over {0,1}; throws ParseError otherwise.
void validate_bitstring(std::string_view bits);

}  // namespace hamvqe
