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

#include "hamvqe/ansatz.hpp"
#include "hamvqe/pauli.hpp"
#include "hamvqe/statevector.hpp"

namespace hamvqe {

enum class GateKind {
    H,
    /// exp(-i angle X / 2); only +-pi/2 is emitted by the compiler.
    RX,
    /// diag(exp(-i angle/2), exp(+i angle/2)).
    RZ,
    CX,
    /// RZ tracked as a software phase-frame update; not a physical gate.
    FrameZ,
};

struct Gate {
    GateKind kind;
    std::size_t qubit = 0;
    /// Target for CX; unused otherwise.
    std::size_t target = 0;
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

struct GateCounts {
    std::size_t one_qubit = 0;
    std::size_t two_qubit = 0;

    bool operator==(const GateCounts &) const = default;
};

class GateCircuit {
  public:
    explicit GateCircuit(std::size_t n_qubits = 1);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    GateCounts counts() const noexcept { return counts_; }
    bool empty() const noexcept { return gates_.empty(); }

    /// Validates qubit indices and updates the counts.
    void append(const Gate &g);
    void append(const GateCircuit &other);

    /// Counts derived from the gate list from scratch.
    GateCounts recount() const noexcept;

    bool operator==(const GateCircuit &) const = default;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    GateCounts counts_;
};

/// exp(-i angle P): basis change (H for X, RX(pi/2) for Y) on every active
/// qubit, a CNOT ladder up the active qubits in ascending order, RZ(2 angle)
/// on the last active qubit, the mirrored ladder and the inverse basis
/// changes. Throws EmptyTermError for the all-identity string.
GateCircuit compile_pauli_exp(const PauliString &p, double angle);

/// Lowers build_state's operator sequence (not the Hartree-Fock preparation).
/// With `z_in_software` the drive rotations become FrameZ entries that do not
/// count as gates.
GateCircuit compile_ansatz(const AnsatzSpec &spec, std::span<const double> params,
                           const QubitHamiltonian &h, bool z_in_software);

/// Formula bounds on the counts of compile_ansatz (z_in_software = false):
/// one-qubit (3N+1)KP for QaoaInspired, (2N+1)KP for ImagTime; two-qubit 2(N-1)KP.
GateCounts ansatz_count_bound(Family family, std::size_t n_qubits, std::size_t terms,
                              std::size_t layers) noexcept;

StateVector simulate_circuit(const GateCircuit &c, const StateVector &start);

/// Text form: header `qubits N`, then one gate per line: `H q`, `RX q angle`,
/// `RZ q angle`, `CX c t`, `FZ q angle` (software frame). Angles use 17
/// significant digits.
std::string export_circuit(const GateCircuit &c);
GateCircuit import_circuit(std::string_view text);

}  // namespace hamvqe
