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

#include "hamvqe/compiler.hpp"

#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "hamvqe/error.hpp"

namespace hamvqe {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

}  // namespace

GateCircuit::GateCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw ValidationError("circuit needs at least one qubit");
    }
}

void GateCircuit::append(const Gate &g) {
    if (g.qubit >= n_qubits_ || (g.kind == GateKind::CX && g.target >= n_qubits_)) {
        throw DimensionMismatchError("gate acts outside a " + std::to_string(n_qubits_) +
                                     "-qubit circuit");
    }
    if (g.kind == GateKind::CX && g.qubit == g.target) {
        throw ValidationError("CX control and target coincide");
    }
    gates_.push_back(g);
    if (g.kind == GateKind::CX) {
        ++counts_.two_qubit;
    } else if (g.kind != GateKind::FrameZ) {
        ++counts_.one_qubit;
    }
}

void GateCircuit::append(const GateCircuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionMismatchError("cannot concatenate circuits of different widths");
    }
    for (const Gate &g : other.gates_) {
        append(g);
    }
}

GateCounts GateCircuit::recount() const noexcept {
    GateCounts c;
    for (const Gate &g : gates_) {
        if (g.kind == GateKind::CX) {
            ++c.two_qubit;
        } else if (g.kind != GateKind::FrameZ) {
            ++c.one_qubit;
        }
    }
    return c;
}

GateCircuit compile_pauli_exp(const PauliString &p, double angle) {
    std::vector<std::size_t> active;
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        if (p[q] != Pauli::I) {
            active.push_back(q);
        }
    }
    if (active.empty()) {
        throw EmptyTermError("cannot compile the exponential of the identity string " + p.str());
    }

    GateCircuit c(p.n_qubits());
    auto basis_change = [&](bool inverse) {
        for (std::size_t q : active) {
            if (p[q] == Pauli::X) {
                c.append({GateKind::H, q});
            } else if (p[q] == Pauli::Y) {
                c.append({GateKind::RX, q, 0, inverse ? -kHalfPi : kHalfPi});
            }
        }
    };

    basis_change(false);
    for (std::size_t k = 0; k + 1 < active.size(); ++k) {
        c.append({GateKind::CX, active[k], active[k + 1]});
    }
    c.append({GateKind::RZ, active.back(), 0, 2.0 * angle});
    for (std::size_t k = active.size() - 1; k > 0; --k) {
        c.append({GateKind::CX, active[k - 1], active[k]});
    }
    basis_change(true);
    return c;
}

GateCircuit compile_ansatz(const AnsatzSpec &spec, std::span<const double> params,
                           const QubitHamiltonian &h, bool z_in_software) {
    if (params.size() != spec.parameter_count()) {
        throw ValidationError("expected " + std::to_string(spec.parameter_count()) +
                              " parameters, got " + std::to_string(params.size()));
    }
    if (h.n_qubits() != spec.n_qubits()) {
        throw DimensionMismatchError("ansatz and Hamiltonian act on different qubit counts");
    }
    GateCircuit c(spec.n_qubits());
    const auto gens = spec.generators();
    for (std::size_t l = 0; l < spec.layers(); ++l) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            c.append(compile_pauli_exp(gens[k], params[spec.gamma_index(l, k)]));
            if (spec.family() == Family::QaoaInspired) {
                const std::size_t base = spec.block_offset(l, k);
                for (std::size_t q = 0; q < spec.n_qubits(); ++q) {
                    // exp(-i beta Z) = RZ(2 beta)
                    c.append({z_in_software ? GateKind::FrameZ : GateKind::RZ, q, 0,
                              2.0 * params[base + q]});
                }
            }
        }
    }
    return c;
}

GateCounts ansatz_count_bound(Family family, std::size_t n_qubits, std::size_t terms,
                              std::size_t layers) noexcept {
    const std::size_t kp = terms * layers;
    const std::size_t per_term = family == Family::QaoaInspired ? 3 * n_qubits + 1
                                                                : 2 * n_qubits + 1;
    return {per_term * kp, 2 * (n_qubits - 1) * kp};
}

StateVector simulate_circuit(const GateCircuit &c, const StateVector &start) {
    if (c.n_qubits() != start.n_qubits()) {
        throw DimensionMismatchError("circuit width " + std::to_string(c.n_qubits()) +
                                     " does not match the " + std::to_string(start.n_qubits()) +
                                     "-qubit state");
    }
    StateVector s = start;
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: s.apply_hadamard(g.qubit); break;
            case GateKind::RX: s.apply_rx(g.qubit, g.angle); break;
            case GateKind::RZ:
            case GateKind::FrameZ: s.apply_rz(g.qubit, g.angle); break;
            case GateKind::CX: s.apply_cnot(g.qubit, g.target); break;
        }
    }
    return s;
}

std::string export_circuit(const GateCircuit &c) {
    std::string out = "qubits " + std::to_string(c.n_qubits()) + "\n";
    for (const Gate &g : c.gates()) {
        const std::string q = std::to_string(g.qubit);
        switch (g.kind) {
            case GateKind::H: out += "H " + q; break;
            case GateKind::RX: out += "RX " + q + " " + format_angle(g.angle); break;
            case GateKind::RZ: out += "RZ " + q + " " + format_angle(g.angle); break;
            case GateKind::FrameZ: out += "FZ " + q + " " + format_angle(g.angle); break;
            case GateKind::CX: out += "CX " + q + " " + std::to_string(g.target); break;
        }
        out += '\n';
    }
    return out;
}

GateCircuit import_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string &what) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": " + what, line_no);
    };

    std::optional<GateCircuit> c;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string op;
        if (!(fields >> op)) {
            continue;
        }
        if (!c) {
            std::size_t n = 0;
            if (op != "qubits" || !(fields >> n) || n == 0) {
                fail("expected header 'qubits N'");
            }
            c.emplace(n);
            continue;
        }
        Gate g{GateKind::H};
        bool ok = static_cast<bool>(fields >> g.qubit);
        if (op == "H") {
            g.kind = GateKind::H;
        } else if (op == "RX" || op == "RZ" || op == "FZ") {
            g.kind = op == "RX" ? GateKind::RX : op == "RZ" ? GateKind::RZ : GateKind::FrameZ;
            ok = ok && static_cast<bool>(fields >> g.angle);
        } else if (op == "CX") {
            g.kind = GateKind::CX;
            ok = ok && static_cast<bool>(fields >> g.target);
        } else {
            fail("unknown gate '" + op + "'");
        }
        std::string extra;
        if (!ok || (fields >> extra)) {
            fail("malformed operands for " + op);
        }
        try {
            c->append(g);
        } catch (const Error &e) {
            fail(e.what());
        }
    }
    if (!c) {
        fail("missing header 'qubits N'");
    }
    return *c;
}

}  // namespace hamvqe
