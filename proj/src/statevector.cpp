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

#include "hamvqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "hamvqe/error.hpp"

namespace hamvqe {
namespace {

constexpr Complex kI{0.0, 1.0};

// i^k for k mod 4.
Complex i_power(std::size_t k) {
    switch (k & 3u) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// P|i> = phase(i) |i ^ x>, with phase(i) = i^{#Y} (-1)^{popcount(i & z)}.
struct PauliAction {
    std::uint64_t x;
    std::uint64_t z;
    Complex y_phase;

    explicit PauliAction(const PauliString &p)
        : x(p.x_mask()), z(p.z_mask()), y_phase(i_power(p.count(Pauli::Y))) {}

    Complex phase(std::uint64_t i) const {
        return (std::popcount(i & z) & 1) ? -y_phase : y_phase;
    }
};

std::size_t checked_qubit_count(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw DimensionMismatchError("amplitude count " + std::to_string(dim) +
                                     " is not a power of two");
    }
    auto n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n == 0 || n > StateVector::kMaxQubits) {
        throw DimensionMismatchError("state must have between 1 and " +
                                     std::to_string(StateVector::kMaxQubits) + " qubits");
    }
    return n;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw DimensionMismatchError("state must have between 1 and " +
                                     std::to_string(kMaxQubits) + " qubits");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : n_qubits_(checked_qubit_count(amplitudes.size())), amps_(std::move(amplitudes)) {}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::normalize() {
    double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NumericalError("cannot normalize a state with norm " + std::to_string(n));
    }
    double inv = 1.0 / n;
    for (auto &a : amps_) {
        a *= inv;
    }
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw DimensionMismatchError("qubit index " + std::to_string(qubit) +
                                     " out of range for " + std::to_string(n_qubits_) + " qubits");
    }
}

void StateVector::check_pauli(const PauliString &p) const {
    if (p.n_qubits() != n_qubits_) {
        throw DimensionMismatchError("Pauli string " + p.str() + " acts on " +
                                     std::to_string(p.n_qubits()) + " qubits, state has " +
                                     std::to_string(n_qubits_));
    }
}

void StateVector::apply_pauli_exp(const PauliString &p, double angle) {
    check_pauli(p);
    const PauliAction act(p);
    const double c = std::cos(angle);
    const Complex mis = -kI * std::sin(angle);
    const std::uint64_t dim = amps_.size();

    if (act.x == 0) {
        // Diagonal string: each amplitude picks up cos -/+ i sin.
        const Complex plus = c + mis;
        const Complex minus = c - mis;
        for (std::uint64_t i = 0; i < dim; ++i) {
            amps_[i] *= (std::popcount(i & act.z) & 1) ? minus : plus;
        }
        return;
    }

    const std::uint64_t high = std::bit_floor(act.x);
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & high) {
            continue;
        }
        const std::uint64_t j = i ^ act.x;
        const Complex a = amps_[i];
        const Complex b = amps_[j];
        amps_[i] = c * a + mis * act.phase(j) * b;
        amps_[j] = c * b + mis * act.phase(i) * a;
    }
}

void StateVector::apply_z_rotation(std::size_t qubit, double angle) {
    check_qubit(qubit);
    const Complex down = std::polar(1.0, -angle);
    const Complex up = std::polar(1.0, angle);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= (i & bit) ? up : down;
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    check_pauli(p);
    const PauliAction act(p);
    if (act.x == 0) {
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            amps_[i] *= act.phase(i);
        }
        return;
    }
    const std::uint64_t high = std::bit_floor(act.x);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & high) {
            continue;
        }
        const std::uint64_t j = i ^ act.x;
        const Complex a = amps_[i];
        amps_[i] = act.phase(j) * amps_[j];
        amps_[j] = act.phase(i) * a;
    }
}

void StateVector::apply_hadamard(std::size_t qubit) {
    check_qubit(qubit);
    const double r = 1.0 / std::sqrt(2.0);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a = amps_[i];
        const Complex b = amps_[i | bit];
        amps_[i] = r * (a + b);
        amps_[i | bit] = r * (a - b);
    }
}

void StateVector::apply_rx(std::size_t qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(theta / 2);
    const Complex mis = -kI * std::sin(theta / 2);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a = amps_[i];
        const Complex b = amps_[i | bit];
        amps_[i] = c * a + mis * b;
        amps_[i | bit] = mis * a + c * b;
    }
}

void StateVector::apply_rz(std::size_t qubit, double theta) {
    apply_z_rotation(qubit, theta / 2);
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw DimensionMismatchError("CNOT control and target coincide");
    }
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

StateVector prepare_basis_state(std::string_view bits) {
    validate_bitstring(bits);
    StateVector state(bits.size());
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= std::uint64_t{1} << k;
        }
    }
    state[0] = 0.0;
    state[index] = 1.0;
    return state;
}

Complex pauli_expectation(const StateVector &state, const PauliString &p) {
    if (p.n_qubits() != state.n_qubits()) {
        throw DimensionMismatchError("Pauli string " + p.str() + " does not match a " +
                                     std::to_string(state.n_qubits()) + "-qubit state");
    }
    const PauliAction act(p);
    Complex sum{};
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        sum += std::conj(state[i ^ act.x]) * act.phase(i) * state[i];
    }
    return sum;
}

double expectation(const StateVector &state, std::span<const WeightedTerm> terms) {
    Complex sum{};
    for (const auto &t : terms) {
        sum += t.coeff * pauli_expectation(state, t.pauli);
    }
    if (std::abs(sum.imag()) > 1e-10) {
        throw NumericalError("energy has imaginary part " + std::to_string(sum.imag()));
    }
    return sum.real();
}

double expectation(const StateVector &state, const QubitHamiltonian &h) {
    return expectation(state, h.terms());
}

PauliSumOperator::PauliSumOperator(std::size_t n_qubits, std::span<const WeightedTerm> terms)
    : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > StateVector::kMaxQubits) {
        throw DimensionMismatchError("operator must act on between 1 and " +
                                     std::to_string(StateVector::kMaxQubits) + " qubits");
    }
    std::map<std::uint64_t, std::vector<const WeightedTerm *>> groups;
    for (const auto &t : terms) {
        if (t.pauli.n_qubits() != n_qubits) {
            throw DimensionMismatchError("term " + t.pauli.str() + " does not act on " +
                                         std::to_string(n_qubits) + " qubits");
        }
        groups[t.pauli.x_mask()].push_back(&t);
    }
    const std::uint64_t d = dim();
    masks_.reserve(groups.size());
    diagonals_.assign(groups.size() * d, Complex{});
    std::size_t g = 0;
    for (const auto &[mask, members] : groups) {
        masks_.push_back(mask);
        Complex *diag = diagonals_.data() + g * d;
        for (const WeightedTerm *t : members) {
            const PauliAction act(t->pauli);
            const Complex plus = t->coeff * act.y_phase;
            for (std::uint64_t i = 0; i < d; ++i) {
                diag[i] += (std::popcount(i & act.z) & 1) ? -plus : plus;
            }
        }
        ++g;
    }
}

PauliSumOperator::PauliSumOperator(const QubitHamiltonian &h)
    : PauliSumOperator(h.n_qubits(), h.terms()) {}

void PauliSumOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
    const std::uint64_t d = dim();
    if (in.size() != d || out.size() != d) {
        throw DimensionMismatchError("operator applied to a vector of the wrong size");
    }
    std::fill(out.begin(), out.end(), Complex{});
    for (std::size_t g = 0; g < masks_.size(); ++g) {
        const std::uint64_t m = masks_[g];
        const Complex *diag = diagonals_.data() + g * d;
        for (std::uint64_t i = 0; i < d; ++i) {
            out[i ^ m] += diag[i] * in[i];
        }
    }
}

double PauliSumOperator::expectation(const StateVector &state) const {
    const std::uint64_t d = dim();
    if (state.dim() != d) {
        throw DimensionMismatchError("state does not match the operator dimension");
    }
    const auto psi = state.amplitudes();
    double sum = 0.0;
    for (std::size_t g = 0; g < masks_.size(); ++g) {
        const std::uint64_t m = masks_[g];
        const Complex *diag = diagonals_.data() + g * d;
        double part = 0.0;
        if (m == 0) {
            for (std::uint64_t i = 0; i < d; ++i) {
                part += diag[i].real() * std::norm(psi[i]);
            }
        } else {
            // Hermiticity pairs (i, i^m) into complex conjugates; only the
            // real part survives.
            for (std::uint64_t i = 0; i < d; ++i) {
                part += (std::conj(psi[i ^ m]) * diag[i] * psi[i]).real();
            }
        }
        sum += part;
    }
    return sum;
}

}  // namespace hamvqe
