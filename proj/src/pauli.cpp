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

#include "hamvqe/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hamvqe/error.hpp"

namespace hamvqe {

char pauli_char(Pauli p) noexcept { return "IXYZ"[static_cast<int>(p)]; }

PauliString::PauliString(std::vector<Pauli> word) : word_(std::move(word)) {}

PauliString PauliString::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty Pauli string", 0);
    }
    std::vector<Pauli> word;
    word.reserve(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        switch (text[k]) {
            case 'I': word.push_back(Pauli::I); break;
            case 'X': word.push_back(Pauli::X); break;
            case 'Y': word.push_back(Pauli::Y); break;
            case 'Z': word.push_back(Pauli::Z); break;
            default:
                throw ParseError("invalid Pauli character '" + std::string(1, text[k]) +
                                     "' at position " + std::to_string(k),
                                 k);
        }
    }
    return PauliString(std::move(word));
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(word_.size());
    for (Pauli p : word_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

std::size_t PauliString::weight() const noexcept {
    return word_.size() - count(Pauli::I);
}

std::size_t PauliString::count(Pauli p) const noexcept {
    return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), p));
}

bool PauliString::is_diagonal() const noexcept {
    return std::all_of(word_.begin(), word_.end(),
                       [](Pauli p) { return p == Pauli::I || p == Pauli::Z; });
}

std::uint64_t PauliString::x_mask() const {
    if (word_.size() > 64) {
        throw DimensionMismatchError("bit masks need at most 64 qubits");
    }
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (word_[k] == Pauli::X || word_[k] == Pauli::Y) {
            mask |= std::uint64_t{1} << k;
        }
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const {
    if (word_.size() > 64) {
        throw DimensionMismatchError("bit masks need at most 64 qubits");
    }
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (word_[k] == Pauli::Y || word_[k] == Pauli::Z) {
            mask |= std::uint64_t{1} << k;
        }
    }
    return mask;
}

PauliString xy_substitute(const PauliString &p) {
    std::vector<Pauli> word(p.word().begin(), p.word().end());
    auto x = std::find(word.begin(), word.end(), Pauli::X);
    if (x != word.end()) {
        *x = Pauli::Y;
        return PauliString(std::move(word));
    }
    auto y = std::find(word.begin(), word.end(), Pauli::Y);
    if (y != word.end()) {
        *y = Pauli::X;
        return PauliString(std::move(word));
    }
    throw NotSubstitutableError("Pauli string " + p.str() + " has no X or Y to substitute");
}

void validate_bitstring(std::string_view bits) {
    if (bits.empty()) {
        throw ParseError("empty bitstring", 0);
    }
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw ParseError("invalid bit '" + std::string(1, bits[k]) + "' at position " +
                                 std::to_string(k),
                             k);
        }
    }
}

QubitHamiltonian::QubitHamiltonian(std::string name, std::size_t n_qubits,
                                   std::vector<WeightedTerm> terms, std::string hf_bitstring,
                                   nlohmann::json metadata)
    : name_(std::move(name)),
      n_qubits_(n_qubits),
      hf_bitstring_(std::move(hf_bitstring)),
      metadata_(metadata.is_null() ? nlohmann::json::object() : std::move(metadata)) {
    if (n_qubits_ == 0) {
        throw ValidationError("n_qubits must be positive");
    }
    validate_bitstring(hf_bitstring_);
    if (hf_bitstring_.size() != n_qubits_) {
        throw ValidationError("hf_bitstring has length " + std::to_string(hf_bitstring_.size()) +
                              ", expected " + std::to_string(n_qubits_));
    }
    if (!metadata_.is_object()) {
        throw ValidationError("metadata must be a key-value map");
    }

    std::map<PauliString, std::size_t> seen;
    terms_.reserve(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j) {
        auto &t = terms[j];
        if (t.pauli.n_qubits() != n_qubits_) {
            throw ValidationError("term " + std::to_string(j) + " (" + t.pauli.str() + ") acts on " +
                                  std::to_string(t.pauli.n_qubits()) + " qubits, expected " +
                                  std::to_string(n_qubits_));
        }
        if (!std::isfinite(t.coeff)) {
            throw ValidationError("term " + std::to_string(j) + " has a non-finite coefficient");
        }
        auto [it, inserted] = seen.emplace(t.pauli, terms_.size());
        if (inserted) {
            terms_.push_back(std::move(t));
        } else {
            terms_[it->second].coeff += t.coeff;
            ++merged_duplicates_;
        }
    }
}

std::ptrdiff_t QubitHamiltonian::find(const PauliString &p) const noexcept {
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (terms_[j].pauli == p) {
            return static_cast<std::ptrdiff_t>(j);
        }
    }
    return -1;
}

bool QubitHamiltonian::has_exact_energy() const {
    return metadata_.contains("exact_energy") && metadata_["exact_energy"].is_number();
}

double QubitHamiltonian::exact_energy() const {
    if (!has_exact_energy()) {
        throw ValidationError("Hamiltonian '" + name_ + "' has no exact_energy metadata");
    }
    return metadata_["exact_energy"].get<double>();
}

bool QubitHamiltonian::operator==(const QubitHamiltonian &other) const {
    return name_ == other.name_ && n_qubits_ == other.n_qubits_ && terms_ == other.terms_ &&
           hf_bitstring_ == other.hf_bitstring_ && metadata_ == other.metadata_;
}

}  // namespace hamvqe
