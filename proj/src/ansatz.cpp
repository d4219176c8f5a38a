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

#include "hamvqe/ansatz.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hamvqe/error.hpp"

namespace hamvqe {

std::string_view family_name(Family f) noexcept {
    return f == Family::QaoaInspired ? "qaoa" : "imag";
}

Family parse_family(std::string_view text) {
    if (text == "qaoa") {
        return Family::QaoaInspired;
    }
    if (text == "imag") {
        return Family::ImagTime;
    }
    throw ParseError("unknown ansatz family '" + std::string(text) + "' (expected qaoa or imag)",
                     0);
}

AnsatzSpec::AnsatzSpec(Family family, std::vector<std::size_t> selected, std::size_t layers,
                       const QubitHamiltonian &h)
    : family_(family), selected_(std::move(selected)), layers_(layers), n_qubits_(h.n_qubits()) {
    if (layers_ == 0) {
        throw ValidationError("layer count must be at least 1");
    }
    std::set<std::size_t> seen;
    generators_.reserve(selected_.size());
    for (std::size_t j : selected_) {
        if (j >= h.size()) {
            throw ValidationError("term index " + std::to_string(j) + " out of range (M = " +
                                  std::to_string(h.size()) + ")");
        }
        if (!seen.insert(j).second) {
            throw ValidationError("term index " + std::to_string(j) + " selected twice");
        }
        const PauliString &p = h.term(j).pauli;
        generators_.push_back(family_ == Family::ImagTime ? xy_substitute(p) : p);
    }
}

std::size_t AnsatzSpec::block_size() const noexcept {
    return family_ == Family::QaoaInspired ? n_qubits_ + 1 : 1;
}

std::size_t AnsatzSpec::parameter_count() const noexcept {
    return hamvqe::parameter_count(family_, n_qubits_, selected_.size(), layers_);
}

std::size_t AnsatzSpec::block_offset(std::size_t layer, std::size_t k) const noexcept {
    return (layer * selected_.size() + k) * block_size();
}

std::size_t AnsatzSpec::gamma_index(std::size_t layer, std::size_t k) const noexcept {
    return block_offset(layer, k) + block_size() - 1;
}

std::size_t parameter_count(Family family, std::size_t n_qubits, std::size_t terms,
                            std::size_t layers) noexcept {
    const std::size_t per_block = family == Family::QaoaInspired ? n_qubits + 1 : 1;
    return per_block * terms * layers;
}

void build_state_into(const AnsatzSpec &spec, std::span<const double> params,
                      const StateVector &start, StateVector &out) {
    if (params.size() != spec.parameter_count()) {
        throw ValidationError("expected " + std::to_string(spec.parameter_count()) +
                              " parameters, got " + std::to_string(params.size()));
    }
    if (start.n_qubits() != spec.n_qubits()) {
        throw DimensionMismatchError("start state does not match the ansatz qubit count");
    }
    out = start;
    const auto gens = spec.generators();
    for (std::size_t l = 0; l < spec.layers(); ++l) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::size_t base = spec.block_offset(l, k);
            out.apply_pauli_exp(gens[k], params[spec.gamma_index(l, k)]);
            if (spec.family() == Family::QaoaInspired) {
                for (std::size_t q = 0; q < spec.n_qubits(); ++q) {
                    if (params[base + q] != 0.0) {
                        out.apply_z_rotation(q, params[base + q]);
                    }
                }
            }
        }
    }
}

StateVector build_state(const AnsatzSpec &spec, std::span<const double> params,
                        const QubitHamiltonian &h) {
    if (h.n_qubits() != spec.n_qubits()) {
        throw DimensionMismatchError("ansatz and Hamiltonian act on different qubit counts");
    }
    const StateVector start = prepare_basis_state(h.hf_bitstring());
    StateVector out(spec.n_qubits());
    build_state_into(spec, params, start, out);
    return out;
}

ParameterVector extend_parameters(const AnsatzSpec &from, std::span<const double> params,
                                  const AnsatzSpec &to) {
    const auto old_sel = from.selected();
    const auto new_sel = to.selected();
    if (from.family() != to.family() || from.layers() != to.layers() ||
        from.n_qubits() != to.n_qubits() || old_sel.size() > new_sel.size() ||
        !std::equal(old_sel.begin(), old_sel.end(), new_sel.begin())) {
        throw ValidationError("target ansatz does not extend the source selection");
    }
    if (params.size() != from.parameter_count()) {
        throw ValidationError("parameter vector does not match the source ansatz");
    }
    ParameterVector out(to.parameter_count(), 0.0);
    const std::size_t b = from.block_size();
    for (std::size_t l = 0; l < from.layers(); ++l) {
        for (std::size_t k = 0; k < old_sel.size(); ++k) {
            std::copy_n(params.begin() + static_cast<std::ptrdiff_t>(from.block_offset(l, k)), b,
                        out.begin() + static_cast<std::ptrdiff_t>(to.block_offset(l, k)));
        }
    }
    return out;
}

}  // namespace hamvqe
