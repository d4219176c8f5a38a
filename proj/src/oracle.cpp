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

#include "hamvqe/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "hamvqe/error.hpp"

namespace hamvqe {
namespace {

using Vec = std::vector<Complex>;

Complex inner(const Vec &a, const Vec &b) {
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double vec_norm(const Vec &a) {
    double s = 0.0;
    for (const auto &x : a) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

void scale(Vec &a, double f) {
    for (auto &x : a) {
        x *= f;
    }
}

// w -= sum_k <v_k|w> v_k, twice (classical Gram-Schmidt with one repeat).
void reorthogonalize(const std::vector<Vec> &basis, Vec &w) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vec &v : basis) {
            const Complex c = inner(v, w);
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] -= c * v[i];
            }
        }
    }
}

double residual(const PauliSumOperator &op, const Vec &x, double e, Vec &scratch) {
    op.apply(x, scratch);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::norm(scratch[i] - e * x[i]);
    }
    return std::sqrt(s);
}

}  // namespace

SpectrumResult exact_ground(const PauliSumOperator &op, const LanczosOptions &options) {
    const std::size_t dim = op.dim();
    const std::size_t per_vector = dim * sizeof(Complex);
    const std::size_t basis_cap = std::max<std::size_t>(
        4, std::min({options.max_iterations, dim, options.max_basis_bytes / per_vector}));

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    Vec start(dim);
    for (auto &x : start) {
        x = Complex(normal(rng), normal(rng));
    }
    scale(start, 1.0 / vec_norm(start));

    std::size_t iterations = 0;
    double best_residual = std::numeric_limits<double>::infinity();
    Vec scratch(dim);
    Vec ritz(dim);
    double ritz_value = 0.0;

    while (true) {
        std::vector<Vec> basis;
        std::vector<double> alpha, beta;
        basis.push_back(start);
        bool exhausted = false;
        while (true) {
            Vec w(dim);
            op.apply(basis.back(), w);
            ++iterations;
            alpha.push_back(inner(basis.back(), w).real());
            reorthogonalize(basis, w);
            const double b = vec_norm(w);

            const auto k = static_cast<Eigen::Index>(alpha.size());
            Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
            Eigen::VectorXd sub = k > 1 ? Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1)
                                        : Eigen::VectorXd();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            const double estimate = std::abs(b * tri.eigenvectors()(k - 1, 0));

            exhausted = b < 1e-12 * std::max(1.0, std::abs(alpha.back()));
            const bool done = estimate < 0.1 * options.tolerance || exhausted ||
                              basis.size() >= basis_cap ||
                              iterations >= options.max_iterations;
            if (done) {
                ritz_value = tri.eigenvalues()(0);
                std::fill(ritz.begin(), ritz.end(), Complex{});
                for (Eigen::Index j = 0; j < k; ++j) {
                    const double c = tri.eigenvectors()(j, 0);
                    const Vec &v = basis[static_cast<std::size_t>(j)];
                    for (std::size_t i = 0; i < dim; ++i) {
                        ritz[i] += c * v[i];
                    }
                }
                scale(ritz, 1.0 / vec_norm(ritz));
                break;
            }
            scale(w, 1.0 / b);
            beta.push_back(b);
            basis.push_back(std::move(w));
        }

        // Certify with an explicit residual rather than the Lanczos estimate.
        const double r = residual(op, ritz, ritz_value, scratch);
        best_residual = std::min(best_residual, r);
        if (r < options.tolerance) {
            SpectrumResult out;
            out.ground_energy = ritz_value;
            out.ground_state = StateVector(ritz);
            out.residual_norm = r;
            out.iterations = iterations;
            return out;
        }
        if (iterations >= options.max_iterations) {
            std::ostringstream msg;
            msg << "Lanczos did not converge in " << iterations
                << " iterations; best residual " << best_residual;
            throw NumericalError(msg.str());
        }
        start = ritz;
    }
}

SpectrumResult exact_ground(const QubitHamiltonian &h, const LanczosOptions &options) {
    return exact_ground(PauliSumOperator(h), options);
}

StateVector imaginary_time_evolve(const PauliString &p, double t, const StateVector &start) {
    if (!(t >= 0.0)) {
        throw ValidationError("imaginary time must be non-negative");
    }
    // cosh t (I - tanh t P) keeps every intermediate bounded; the cosh factor
    // drops out in the normalization.
    StateVector moved = start;
    moved.apply_pauli(p);
    StateVector out = start;
    const double th = std::tanh(t);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out[i] -= th * moved[i];
    }
    const double n = out.norm();
    if (!(n > 1e-150) || !std::isfinite(n)) {
        throw NumericalError("state norm underflowed during imaginary-time evolution");
    }
    out.normalize();
    return out;
}

StateVector imaginary_time_evolve(const QubitHamiltonian &h, double t, const StateVector &start,
                                  double dt) {
    if (!(t >= 0.0)) {
        throw ValidationError("imaginary time must be non-negative");
    }
    if (!(dt > 0.0)) {
        throw ValidationError("time step must be positive");
    }
    if (start.n_qubits() != h.n_qubits()) {
        throw DimensionMismatchError("start state does not match the Hamiltonian");
    }
    StateVector psi = start;
    StateVector moved = start;
    double remaining = t;
    while (remaining > 0.0) {
        const double step = std::min(dt, remaining);
        remaining -= step;
        for (const auto &term : h.terms()) {
            if (term.pauli.weight() == 0) {
                continue;
            }
            // exp(-step c P) = cosh(step c) (I - tanh(step c) P)
            const double th = std::tanh(step * term.coeff);
            moved = psi;
            moved.apply_pauli(term.pauli);
            for (std::size_t i = 0; i < psi.dim(); ++i) {
                psi[i] -= th * moved[i];
            }
        }
        const double n = psi.norm();
        if (!(n > 1e-150) || !std::isfinite(n)) {
            throw NumericalError("state norm underflowed during imaginary-time evolution");
        }
        psi.normalize();
    }
    return psi;
}

std::vector<Fig3Row> fig3_amplitudes(std::span<const double> t_grid) {
    const PauliString xx = PauliString::parse("XX");
    const PauliString xy = xy_substitute(xx);
    const StateVector start = prepare_basis_state("10");
    // "10" is qubit 0 set (index 1); "01" is index 2.
    constexpr std::size_t kA = 1, kB = 2;

    std::vector<Fig3Row> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        const StateVector imag = imaginary_time_evolve(xx, t, start);
        StateVector real = start;
        real.apply_pauli_exp(xy, t);
        rows.push_back({t, std::norm(imag[kA]), std::norm(imag[kB]), std::norm(real[kA]),
                        std::norm(real[kB])});
    }
    return rows;
}

}  // namespace hamvqe
