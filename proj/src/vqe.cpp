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

#include "hamvqe/vqe.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "hamvqe/error.hpp"
#include "hamvqe/nelder_mead.hpp"
#include "hamvqe/parallel.hpp"

namespace hamvqe {
namespace {

constexpr double kShift = std::numbers::pi / 4;

// Every generator squares to I, so shifting an angle by pi only flips the
// global sign of the state. Maps each angle into [-pi/2, pi/2).
void wrap_angles(ParameterVector &params, std::span<const std::size_t> idx) {
    constexpr double pi = std::numbers::pi;
    for (std::size_t i : idx) {
        params[i] -= pi * std::floor(params[i] / pi + 0.5);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

struct Refinement {
    ParameterVector x;
    double f;
    std::size_t evaluations;
};

std::vector<double> shift_gradient(const Objective &f, std::span<const double> params) {
    ParameterVector shifted(params.begin(), params.end());
    std::vector<double> g(params.size());
    for (std::size_t m = 0; m < params.size(); ++m) {
        shifted[m] = params[m] + kShift;
        const double up = f(shifted);
        shifted[m] = params[m] - kShift;
        const double down = f(shifted);
        shifted[m] = params[m];
        g[m] = up - down;
    }
    return g;
}

// Quasi-Newton polish with backtracking line search. Never returns a point
// worse than the start.
Refinement bfgs_refine(const Objective &objective, ParameterVector x, double f) {
    const std::size_t n = x.size();
    std::size_t evals = 0;
    auto grad = [&](const ParameterVector &at) {
        evals += 2 * n;
        return shift_gradient(objective, at);
    };
    std::vector<double> g = grad(x);
    std::vector<double> hinv(n * n, 0.0);
    auto reset = [&] {
        std::fill(hinv.begin(), hinv.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            hinv[i * n + i] = 1.0;
        }
    };
    reset();

    std::vector<double> p(n), s(n), y(n), hy(n);
    ParameterVector trial(n);
    for (int iter = 0; iter < 500 && inf_norm(g) > 1e-10; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = -dot(std::span(hinv).subspan(i * n, n), g);
        }
        double slope = dot(g, p);
        if (slope >= 0.0) {
            reset();
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = -g[i];
            }
            slope = dot(g, p);
        }
        double step = 1.0;
        double ft = 0.0;
        bool accepted = false;
        while (step > 1e-12) {
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = x[i] + step * p[i];
            }
            ft = objective(trial);
            ++evals;
            if (ft <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted || ft >= f) {
            break;
        }
        std::vector<double> gt = grad(trial);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = trial[i] - x[i];
            y[i] = gt[i] - g[i];
        }
        x = trial;
        f = ft;
        g = std::move(gt);

        const double sy = dot(s, y);
        if (sy <= 1e-16) {
            reset();
            continue;
        }
        // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
        const double rho = 1.0 / sy;
        for (std::size_t i = 0; i < n; ++i) {
            hy[i] = dot(std::span(hinv).subspan(i * n, n), y);
        }
        const double yhy = dot(y, hy);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                hinv[i * n + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] -
                                          s[i] * hy[j]);
            }
        }
    }
    return {std::move(x), f, evals};
}

}  // namespace

EnergyObjective::EnergyObjective(const AnsatzSpec &spec, const PauliSumOperator &op,
                                 const StateVector &start)
    : spec_(spec), op_(op), start_(start), work_(start) {
    if (op.n_qubits() != spec.n_qubits() || start.n_qubits() != spec.n_qubits()) {
        throw DimensionMismatchError("ansatz, operator and start state disagree on qubit count");
    }
}

double EnergyObjective::operator()(std::span<const double> params) {
    build_state_into(spec_, params, start_, work_);
    const double e = op_.expectation(work_);
    if (!std::isfinite(e)) {
        throw NumericalError("objective returned a non-finite energy");
    }
    return e;
}

std::vector<double> gradient(EnergyObjective &objective, std::span<const double> params) {
    return shift_gradient(std::ref(objective), params);
}

std::vector<double> gradient(const AnsatzSpec &spec, std::span<const double> params,
                             const QubitHamiltonian &h) {
    const PauliSumOperator op(h);
    const StateVector start = prepare_basis_state(h.hf_bitstring());
    EnergyObjective objective(spec, op, start);
    return gradient(objective, params);
}

OptimizationResult minimize(const AnsatzSpec &spec, const QubitHamiltonian &h,
                            const OptimizerConfig &config) {
    const PauliSumOperator op(h);
    return minimize(spec, h, op, config);
}

OptimizationResult minimize(const AnsatzSpec &spec, const QubitHamiltonian &h,
                            const PauliSumOperator &op, const OptimizerConfig &config,
                            std::optional<std::span<const double>> initial,
                            std::span<const std::size_t> free) {
    if (h.n_qubits() != spec.n_qubits()) {
        throw DimensionMismatchError("ansatz and Hamiltonian act on different qubit counts");
    }
    const std::size_t n = spec.parameter_count();
    if (initial && initial->size() != n) {
        throw ValidationError("initial point has " + std::to_string(initial->size()) +
                              " parameters, ansatz needs " + std::to_string(n));
    }
    std::vector<std::size_t> free_idx(free.begin(), free.end());
    if (free_idx.empty()) {
        free_idx.resize(n);
        std::iota(free_idx.begin(), free_idx.end(), std::size_t{0});
    }
    for (std::size_t i : free_idx) {
        if (i >= n) {
            throw ValidationError("free parameter index " + std::to_string(i) + " out of range");
        }
    }
    const ParameterVector base =
        initial ? ParameterVector(initial->begin(), initial->end()) : ParameterVector(n, 0.0);
    const StateVector start = prepare_basis_state(h.hf_bitstring());

    OptimizationResult result;
    if (free_idx.empty()) {
        EnergyObjective objective(spec, op, start);
        result.best_params = base;
        result.best_energy = objective(base);
        result.evaluations = 1;
        result.converged = true;
        result.restarts_used = 1;
        return result;
    }

    const std::size_t m = free_idx.size();
    // Objective over the free coordinates only.
    auto reduced = [&](EnergyObjective &objective, ParameterVector &full) {
        return [&objective, &full, &free_idx](std::span<const double> z) {
            for (std::size_t i = 0; i < z.size(); ++i) {
                full[free_idx[i]] = z[i];
            }
            return objective(full);
        };
    };
    auto expand = [&](std::span<const double> z) {
        ParameterVector full = base;
        for (std::size_t i = 0; i < z.size(); ++i) {
            full[free_idx[i]] = z[i];
        }
        return full;
    };

    const std::size_t restarts = std::max<std::size_t>(1, config.restarts);
    NelderMeadOptions nm;
    nm.ftol = config.tol;
    nm.xtol = config.xtol;
    nm.max_evals = config.max_evals;
    nm.initial_step = config.initial_step;

    std::vector<NelderMeadResult> runs(restarts);
    parallel_for(restarts, config.jobs, [&](std::size_t r) {
        ParameterVector z0(m, 0.0);
        if (r == 0) {
            for (std::size_t i = 0; i < m; ++i) {
                z0[i] = base[free_idx[i]];
            }
        } else {
            std::seed_seq seq{config.seed, static_cast<std::uint64_t>(r)};
            std::mt19937_64 rng(seq);
            std::uniform_real_distribution<double> dist(-config.restart_range,
                                                        config.restart_range);
            for (double &v : z0) {
                v = dist(rng);
            }
        }
        EnergyObjective objective(spec, op, start);
        ParameterVector full = base;
        runs[r] = nelder_mead(reduced(objective, full), std::move(z0), nm);
    });

    std::size_t best = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        result.evaluations += runs[r].evaluations;
        if (runs[r].f < runs[best].f) {
            best = r;
        }
    }
    result.best_params = expand(runs[best].x);
    result.best_energy = runs[best].f;
    result.converged = runs[best].converged;
    result.restarts_used = restarts;
    result.best_restart = best;

    if (config.gradient_refinement) {
        EnergyObjective objective(spec, op, start);
        ParameterVector full = base;
        Refinement polished = bfgs_refine(reduced(objective, full), runs[best].x, runs[best].f);
        result.evaluations += polished.evaluations;
        if (polished.f < result.best_energy) {
            result.best_params = expand(polished.x);
            result.best_energy = polished.f;
        }
    }
    wrap_angles(result.best_params, free_idx);
    return result;
}

}  // namespace hamvqe
