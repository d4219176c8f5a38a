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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hamvqe/pauli.hpp"

namespace hamvqe {

using Complex = std::complex<double>;

/// Dense state of N qubits. Amplitude i belongs to the basis state whose
/// bit k is the value of qubit k.
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits);
    /// Takes ownership of raw amplitudes; the size must be a power of two.
    explicit StateVector(std::vector<Complex> amplitudes);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }

    double norm() const noexcept;
    /// Rescales to unit norm; throws NumericalError when the norm is zero or not finite.
    void normalize();

    /// exp(-i angle P) = cos(angle) I - i sin(angle) P, applied pairwise in place.
    void apply_pauli_exp(const PauliString &p, double angle);
    /// exp(-i angle Z_q).
    void apply_z_rotation(std::size_t qubit, double angle);
    /// Multiplies by the Pauli string itself.
    void apply_pauli(const PauliString &p);

    // Elementary gates used by compiled circuits.
    void apply_hadamard(std::size_t qubit);
    /// RX(theta) = exp(-i theta X / 2).
    void apply_rx(std::size_t qubit, double theta);
    /// RZ(theta) = diag(exp(-i theta/2), exp(+i theta/2)).
    void apply_rz(std::size_t qubit, double theta);
    void apply_cnot(std::size_t control, std::size_t target);

    bool operator==(const StateVector &) const = default;

  private:
    void check_qubit(std::size_t qubit) const;
    void check_pauli(const PauliString &p) const;

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Basis state with qubit k equal to bits[k].
StateVector prepare_basis_state(std::string_view bits);

/// <psi|P|psi>.
Complex pauli_expectation(const StateVector &state, const PauliString &p);

/// sum_j h_j <psi|P_j|psi>, evaluated term by term. Throws NumericalError if the
/// imaginary part exceeds 1e-10 (non-Hermitian input or unnormalized state).
double expectation(const StateVector &state, std::span<const WeightedTerm> terms);
double expectation(const StateVector &state, const QubitHamiltonian &h);

/// Matrix-free form of a Pauli sum.
///
/// Terms are grouped by their flip pattern (x mask); each group is stored as
/// a diagonal d_m so that (H psi)[i ^ m] += d_m[i] psi[i]. Energy evaluation
/// and H|psi> then cost one pass over the amplitudes per group instead of
/// one per term.
class PauliSumOperator {
  public:
    PauliSumOperator(std::size_t n_qubits, std::span<const WeightedTerm> terms);
    explicit PauliSumOperator(const QubitHamiltonian &h);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
    std::size_t group_count() const noexcept { return masks_.size(); }

    /// out = H in. `in` and `out` must not alias.
    void apply(std::span<const Complex> in, std::span<Complex> out) const;

    /// <psi|H|psi>, real part; fixed summation order.
    double expectation(const StateVector &state) const;

  private:
    std::size_t n_qubits_;
    std::vector<std::uint64_t> masks_;
    std::vector<Complex> diagonals_;  // group-major, dim() entries per group
};

}  // namespace hamvqe
