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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamvqe/pauli.hpp"
#include "hamvqe/statevector.hpp"

namespace hamvqe {

enum class Family {
    /// Alternating term exponentials and per-qubit drive Z rotations.
    QaoaInspired,
    /// One angle per term, applied to the X<->Y substituted term.
    ImagTime,
};

std::string_view family_name(Family f) noexcept;
/// Accepts "qaoa" / "imag" (the CLI spellings).
Family parse_family(std::string_view text);

/// Flat list of variational angles.
///
/// Layout: layers outer, then selected terms in selection order. A
/// QaoaInspired block is [beta_0 .. beta_{N-1}, gamma]; an ImagTime block is
/// [gamma].
using ParameterVector = std::vector<double>;

/// Which Hamiltonian terms form a trial state, and how many layers.
class AnsatzSpec {
  public:
    /// Throws ValidationError for repeated or out-of-range indices, or
    /// layers == 0; NotSubstitutableError if an ImagTime selection contains
    /// an I/Z-only term.
    AnsatzSpec(Family family, std::vector<std::size_t> selected, std::size_t layers,
               const QubitHamiltonian &h);

    Family family() const noexcept { return family_; }
    std::span<const std::size_t> selected() const noexcept { return selected_; }
    std::size_t layers() const noexcept { return layers_; }
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t term_count() const noexcept { return selected_.size(); }

    /// Operator exponentiated for each selected term: H_j (QaoaInspired) or
    /// xy_substitute(H_j) (ImagTime), computed once at construction.
    std::span<const PauliString> generators() const noexcept { return generators_; }

    /// Parameters per (layer, term) block: N + 1 or 1.
    std::size_t block_size() const noexcept;
    std::size_t parameter_count() const noexcept;
    /// Offset of block (layer, k), k indexing into selected().
    std::size_t block_offset(std::size_t layer, std::size_t k) const noexcept;
    /// Offset of gamma inside the parameter vector for block (layer, k).
    std::size_t gamma_index(std::size_t layer, std::size_t k) const noexcept;

  private:
    Family family_;
    std::vector<std::size_t> selected_;
    std::size_t layers_;
    std::size_t n_qubits_;
    std::vector<PauliString> generators_;
};

std::size_t parameter_count(Family family, std::size_t n_qubits, std::size_t terms,
                            std::size_t layers) noexcept;
inline std::size_t parameter_count(const AnsatzSpec &spec) noexcept {
    return spec.parameter_count();
}

/// Prepares the trial state from h's Hartree-Fock bitstring.
///
/// For layer l = 1..P and each selected term j in order, the QaoaInspired
/// family applies exp(-i gamma_lj H_j) followed by exp(-i beta_ljq Z_q) for
/// q = 0..N-1; ImagTime applies exp(-i gamma_lj H'_j).
StateVector build_state(const AnsatzSpec &spec, std::span<const double> params,
                        const QubitHamiltonian &h);

/// Workspace form of build_state: overwrites `out` (already sized for N qubits)
/// starting from `start`.
void build_state_into(const AnsatzSpec &spec, std::span<const double> params,
                      const StateVector &start, StateVector &out);

/// Maps parameters of `from` onto the layout of `to`, where `to` selects the
/// same terms as `from` followed by extra ones. New blocks are zero.
ParameterVector extend_parameters(const AnsatzSpec &from, std::span<const double> params,
                                  const AnsatzSpec &to);

}  // namespace hamvqe
