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

// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Set HAMVQE_ACCEPTANCE_FULL=1 for the full H2O
// selection runs (hours); the default runs the first three rounds only.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hamvqe/ansatz.hpp"
#include "hamvqe/commands.hpp"
#include "hamvqe/compiler.hpp"
#include "hamvqe/oracle.hpp"
#include "hamvqe/selection.hpp"
#include "hamvqe/vqe.hpp"
#include "test_support.hpp"

namespace hamvqe {
namespace {

using namespace hamvqe::testing;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string &name, bool ok, const std::string &detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

void note(const std::string &text) {
    std::printf("  %s\n", text.c_str());
    std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::size_t index_of(const QubitHamiltonian &h, const char *pauli) {
    return static_cast<std::size_t>(h.find(PauliString::parse(pauli)));
}

std::vector<double> random_params(std::size_t count, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<double> p(count);
    for (auto &x : p) {
        x = u(rng);
    }
    return p;
}

std::vector<std::size_t> random_selection(const QubitHamiltonian &h, std::size_t k,
                                          std::mt19937_64 &rng) {
    std::vector<std::size_t> pool;
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (!h.term(j).pauli.is_diagonal()) {
            pool.push_back(j);
        }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(k, pool.size()));
    return pool;
}

/// Random Hamiltonian with at least one off-diagonal term.
QubitHamiltonian random_offdiagonal_hamiltonian(std::size_t n, std::size_t m,
                                                std::mt19937_64 &rng) {
    while (true) {
        QubitHamiltonian h = random_hamiltonian(n, m, rng);
        for (const auto &t : h.terms()) {
            if (!t.pauli.is_diagonal()) {
                return h;
            }
        }
    }
}

bool monotone(const SelectionHistory &hist) {
    double prev = hist.hf_energy;
    for (const auto &r : hist.rounds) {
        if (r.best_energy > prev + 1e-10) {
            return false;
        }
        prev = r.best_energy;
    }
    return true;
}

void print_history(const SelectionHistory &hist) {
    for (std::size_t k = 0; k < hist.rounds.size(); ++k) {
        const auto &r = hist.rounds[k];
        note(fmt("K=%zu %s gap=%.6e", k + 1, r.chosen_pauli.str().c_str(), r.energy_gap_to_exact));
    }
}

SelectionHistory run_selection(const QubitHamiltonian &h, Family fam, std::size_t layers,
                               std::size_t max_terms) {
    const auto t0 = Clock::now();
    SelectionConfig cfg;
    cfg.on_round = [&](const SelectionRound &r) {
        note(fmt("%s %s P=%zu: picked %s gap=%.6e (%.0f s)", h.name().c_str(),
                 std::string(family_name(fam)).c_str(), layers, r.chosen_pauli.str().c_str(),
                 r.energy_gap_to_exact, seconds_since(t0)));
    };
    return greedy_select(h, fam, layers, kChemicalAccuracy, max_terms, h.exact_energy(), cfg);
}

double final_gap(const SelectionHistory &hist) {
    return hist.rounds.empty() ? hist.hf_energy - hist.exact_energy
                               : hist.rounds.back().energy_gap_to_exact;
}

void h2_exactness() {
    const auto &h = h2();
    const auto t0 = Clock::now();
    const auto r = cli::cmd_solve(h, {Family::QaoaInspired, {"XX"}, 1, {}});
    const double elapsed = seconds_since(t0);
    const double gap = r["best_energy"].get<double>() - h.exact_energy();

    const AnsatzSpec spec(Family::QaoaInspired, {index_of(h, "XX")}, 1, h);
    const double e0 = h.exact_energy();
    const std::vector<double> a{-0.2406, 0.5448, -0.1118};
    const std::vector<double> b{0.5448, -0.2406, -0.1118};
    const double gap_a = expectation(build_state(spec, a, h), h) - e0;
    const double gap_b = expectation(build_state(spec, b, h), h) - e0;
    report("H2 exactness",
           gap < 1e-6 && elapsed < 5.0 && std::min(gap_a, gap_b) < 1e-3,
           fmt("solve gap %.3e Ha in %.3f s; published angles gap %.3e (beta2 on qubit 0) / "
               "%.3e (beta1 on qubit 0)",
               gap, elapsed, gap_a, gap_b));
}

void pauli_exp_counts() {
    const PauliString p = PauliString::parse("YXXYXXXX");
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    const GateCounts c = compile_pauli_exp(p, 0.3).counts();
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double angle = u(rng);
        const StateVector s = random_state(8, rng);
        StateVector direct = s;
        direct.apply_pauli_exp(p, angle);
        worst = std::max(worst, max_diff(simulate_circuit(compile_pauli_exp(p, angle), s), direct));
    }
    report("Eight-qubit exponential gate counts",
           c.one_qubit == 17 && c.two_qubit == 14 && worst < 1e-10,
           fmt("%zu one-qubit, %zu two-qubit; max amplitude deviation %.2e over 50 states",
               c.one_qubit, c.two_qubit, worst));
}

void count_formulas() {
    std::mt19937_64 rng(3);
    std::size_t equal = 0;
    std::size_t bounded = 0;
    constexpr int kTrials = 100;
    for (int trial = 0; trial < kTrials; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const std::size_t k = std::min<std::size_t>(1 + rng() % 5, std::size_t{1} << n);
        const std::size_t layers = 1 + rng() % 3;
        for (bool xy_only : {true, false}) {
            std::vector<WeightedTerm> terms;
            while (terms.size() < k) {
                const PauliString p =
                    xy_only ? random_xy_pauli(n, rng) : random_offdiagonal_pauli(n, rng, true);
                if (std::none_of(terms.begin(), terms.end(),
                                 [&](const WeightedTerm &t) { return t.pauli == p; })) {
                    terms.push_back({0.1, p});
                }
            }
            const QubitHamiltonian h("random", n, terms, std::string(n, '0'));
            std::vector<std::size_t> sel(k);
            std::iota(sel.begin(), sel.end(), std::size_t{0});
            bool ok = true;
            for (Family fam : {Family::QaoaInspired, Family::ImagTime}) {
                const AnsatzSpec spec(fam, sel, layers, h);
                const std::vector<double> params(spec.parameter_count(), 0.37);
                const GateCounts got = compile_ansatz(spec, params, h, false).counts();
                const GateCounts bound = ansatz_count_bound(fam, n, k, layers);
                if (xy_only) {
                    ok = ok && got == bound;
                    continue;
                }
                std::size_t one = 0;
                std::size_t two = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    const PauliString &g = spec.generators()[j];
                    std::size_t xy = 0;
                    for (std::size_t q = 0; q < n; ++q) {
                        xy += g[q] == Pauli::X || g[q] == Pauli::Y;
                    }
                    one += 2 * xy + 1 + (fam == Family::QaoaInspired ? n : 0);
                    two += 2 * (n - 1);
                }
                ok = ok && got.one_qubit == one * layers && got.two_qubit == two * layers &&
                     got.one_qubit <= bound.one_qubit && got.two_qubit == bound.two_qubit;
            }
            (xy_only ? equal : bounded) += ok ? 1 : 0;
        }
    }
    report("Count formula identities", equal == kTrials && bounded == kTrials,
           fmt("%zu/%d X/Y full-weight cases equal (3N+1)KP, (2N+1)KP and 2(N-1)KP exactly; "
               "%zu/%d general full-weight cases meet the per-term identity and the bound",
               equal, kTrials, bounded, kTrials));
}

SelectionHistory lih_p1;

void lih_convergence() {
    const auto &h = lih();
    const std::size_t m = h.size();
    const auto t0 = Clock::now();
    lih_p1 = run_selection(h, Family::ImagTime, 1, m);
    const double t1 = seconds_since(t0);
    const auto p2 = run_selection(h, Family::ImagTime, 2, m);
    const double t2 = seconds_since(t0) - t1;
    const std::size_t k1 = lih_p1.rounds.size();
    const std::size_t k2 = p2.rounds.size();
    const bool ok1 = lih_p1.converged && k1 <= 4 && lih_p1.minimize_calls <= k1 * m;
    const bool ok2 = p2.converged && k2 <= 3 && p2.minimize_calls <= k2 * m;
    report("LiH convergence", ok1 && ok2,
           fmt("P=1: K=%zu gap %.3e, %zu calls (%.0f s); P=2: K=%zu gap %.3e, %zu calls (%.0f s)",
               k1, final_gap(lih_p1), lih_p1.minimize_calls, t1, k2, final_gap(p2),
               p2.minimize_calls, t2));
}

SelectionHistory h2o_p1;
bool full_run = false;

void h2o_convergence() {
    const auto &h = h2o();
    if (!full_run) {
        h2o_p1 = run_selection(h, Family::ImagTime, 1, 3);
        bool decreasing = !h2o_p1.rounds.empty();
        for (std::size_t k = 1; k < h2o_p1.rounds.size(); ++k) {
            decreasing = decreasing && h2o_p1.rounds[k].energy_gap_to_exact <
                                           h2o_p1.rounds[k - 1].energy_gap_to_exact;
        }
        report("H2O convergence (truncated, 3 rounds)",
               monotone(h2o_p1) && decreasing && h2o_p1.rounds.size() == 3,
               fmt("ImagTime P=1 gaps after 3 rounds: %.3e -> %.3e; set HAMVQE_ACCEPTANCE_FULL=1 "
                   "for the full runs",
                   h2o_p1.rounds.empty() ? 0.0 : h2o_p1.rounds.front().energy_gap_to_exact,
                   final_gap(h2o_p1)));
        return;
    }
    h2o_p1 = run_selection(h, Family::ImagTime, 1, 18);
    const auto p2 = run_selection(h, Family::ImagTime, 2, 12);
    const auto p3 = run_selection(h, Family::ImagTime, 3, 9);
    const auto q3 = run_selection(h, Family::QaoaInspired, 3, 10);
    report("H2O convergence", h2o_p1.converged && p2.converged && p3.converged && q3.converged,
           fmt("ImagTime K=%zu/%zu/%zu at P=1/2/3 (gaps %.3e/%.3e/%.3e); QAOA P=3 K=%zu gap %.3e",
               h2o_p1.rounds.size(), p2.rounds.size(), p3.rounds.size(), final_gap(h2o_p1),
               final_gap(p2), final_gap(p3), q3.rounds.size(), final_gap(q3)));
}

void history_shape() {
    auto ratio = [](const SelectionHistory &hist) {
        return hist.rounds.empty() ? 0.0
                                   : hist.rounds.front().energy_gap_to_exact / final_gap(hist);
    };
    const double r_lih = ratio(lih_p1);
    const double r_h2o = ratio(h2o_p1);
    print_history(lih_p1);
    const auto ext = greedy_select(lih(), Family::ImagTime, 1, 1e-6, 10, lih().exact_energy());
    note(fmt("informational: LiH P=1 continued past the target to K=%zu reaches gap %.3e "
             "(ratio %.2f)",
             ext.rounds.size(), final_gap(ext), ratio(ext)));
    std::string detail = fmt("LiH monotone=%d, K=1/K_final gap ratio %.2f", monotone(lih_p1), r_lih);
    bool ok = monotone(lih_p1) && monotone(h2o_p1) && r_lih >= 10.0;
    if (full_run) {
        ok = ok && r_h2o >= 10.0;
        detail += fmt("; H2O monotone=%d, ratio %.2f", monotone(h2o_p1), r_h2o);
    } else {
        detail += fmt("; H2O monotone=%d over 3 rounds (ratio needs the full run)",
                      monotone(h2o_p1));
    }
    report("Selection history shape", ok, detail);
}

void amplitude_table() {
    std::vector<double> grid;
    for (int k = 0; k <= 400; ++k) {
        grid.push_back(std::numbers::pi / 2 * k / 400);
    }
    double worst = 0.0;
    double mid = 1.0;
    for (const auto &r : fig3_amplitudes(grid)) {
        const double c2 = std::cosh(r.t) * std::cosh(r.t);
        const double s2 = std::sinh(r.t) * std::sinh(r.t);
        for (double d : {r.a_xx2 - c2 / (c2 + s2), r.b_xx2 - s2 / (c2 + s2),
                         r.a_xy2 - std::cos(r.t) * std::cos(r.t),
                         r.b_xy2 - std::sin(r.t) * std::sin(r.t)}) {
            worst = std::max(worst, std::abs(d));
        }
        if (r.t == grid[200]) {
            mid = std::max(std::abs(r.a_xy2 - 0.5), std::abs(r.b_xy2 - 0.5));
        }
    }
    report("Two-qubit amplitude table", worst <= 1e-12 && mid <= 1e-15,
           fmt("max deviation %.2e over 401 points; |a|^2, |b|^2 at pi/4 off 0.5 by %.1e", worst,
               mid));
}

void oracle_equivalence() {
    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const QubitHamiltonian h = random_hamiltonian(n, 4 + 2 * n + trial % 7, rng);
        worst = std::max(worst, std::abs(exact_ground(h).ground_energy - dense_ground(dense(h))));
    }
    const auto &h = h2();
    const StateVector s = imaginary_time_evolve(h, 10.0, prepare_basis_state(h.hf_bitstring()), 1e-3);
    const double itime = expectation(s, h) - exact_ground(h).ground_energy;
    report("Oracle equivalence", worst <= 1e-10 && std::abs(itime) <= 1e-6,
           fmt("Lanczos vs dense max |dE| %.2e over 50 Hamiltonians; H2 imaginary time (t=10, "
               "dt=1e-3) off by %.2e",
               worst, itime));
}

void gradient_check() {
    std::mt19937_64 rng(9);
    double worst = 0.0;
    constexpr double kStep = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const Family fam = trial % 2 ? Family::ImagTime : Family::QaoaInspired;
        const QubitHamiltonian h = random_offdiagonal_hamiltonian(n, 3 + n, rng);
        const AnsatzSpec spec(fam, random_selection(h, 1 + trial % 3, rng), 1 + trial % 2, h);
        auto params = random_params(spec.parameter_count(), rng);
        const auto g = gradient(spec, params, h);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double keep = params[i];
            params[i] = keep + kStep;
            const double up = expectation(build_state(spec, params, h), h);
            params[i] = keep - kStep;
            const double down = expectation(build_state(spec, params, h), h);
            params[i] = keep;
            worst = std::max(worst, std::abs(g[i] - (up - down) / (2 * kStep)));
        }
    }
    report("Gradient check", worst <= 1e-6,
           fmt("max |parameter shift - central difference| %.2e over 100 configurations", worst));
}

void property_suites() {
    std::mt19937_64 rng(10);
    double norm_dev = 0.0;
    bool zero_hf = true;
    double shift_dev = 0.0;
    double below = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const QubitHamiltonian &h = trial % 3 == 0 ? h2() : lih();
        const Family fam = trial % 2 ? Family::ImagTime : Family::QaoaInspired;
        const AnsatzSpec spec(fam, random_selection(h, 1 + trial % 4, rng), 1 + trial % 3, h);
        auto params = random_params(spec.parameter_count(), rng);
        const StateVector s = build_state(spec, params, h);
        const double e = expectation(s, h);
        norm_dev = std::max(norm_dev, std::abs(s.norm() - 1.0));
        below = std::max(below, h.exact_energy() - e);

        const std::vector<double> zero(spec.parameter_count(), 0.0);
        const StateVector hf = prepare_basis_state(h.hf_bitstring());
        zero_hf = zero_hf && expectation(build_state(spec, zero, h), h) == expectation(hf, h);

        params[spec.gamma_index(trial % spec.layers(), trial % spec.term_count())] +=
            std::numbers::pi;
        shift_dev = std::max(shift_dev, std::abs(expectation(build_state(spec, params, h), h) - e));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const QubitHamiltonian &h = trial % 2 ? h2() : lih();
        below = std::max(below, h.exact_energy() - expectation(random_state(h.n_qubits(), rng), h));
    }

    SelectionConfig one;
    one.optimizer.seed = 11;
    SelectionConfig many = one;
    many.jobs = 4;
    const auto a = greedy_select(lih(), Family::ImagTime, 1, kChemicalAccuracy, 2,
                                 lih().exact_energy(), one);
    const auto b = greedy_select(lih(), Family::ImagTime, 1, kChemicalAccuracy, 2,
                                 lih().exact_energy(), many);
    const auto c = greedy_select(lih(), Family::ImagTime, 1, kChemicalAccuracy, 2,
                                 lih().exact_energy(), one);
    bool same = a.rounds.size() == b.rounds.size() && a.rounds.size() == c.rounds.size();
    for (std::size_t k = 0; same && k < a.rounds.size(); ++k) {
        same = a.rounds[k].chosen_term_index == b.rounds[k].chosen_term_index &&
               a.rounds[k].params == b.rounds[k].params &&
               a.rounds[k].params == c.rounds[k].params &&
               a.rounds[k].best_energy == b.rounds[k].best_energy;
    }

    report("Property suites",
           norm_dev <= 1e-10 && zero_hf && shift_dev <= 1e-10 && same && below <= 1e-10,
           fmt("norm dev %.1e; zero params give HF exactly: %s; gamma+pi dev %.1e; selection "
               "deterministic: %s; max E0 - E %.1e",
               norm_dev, zero_hf ? "yes" : "no", shift_dev, same ? "yes" : "no", below));
}

int run() {
    if (const char *env = std::getenv("HAMVQE_ACCEPTANCE_FULL")) {
        full_run = std::string(env) == "1";
    }
    const std::vector<std::pair<const char *, std::function<void()>>> steps{
        {"H2 exactness", h2_exactness},
        {"Eight-qubit exponential gate counts", pauli_exp_counts},
        {"Count formula identities", count_formulas},
        {"LiH convergence", lih_convergence},
        {"H2O convergence", h2o_convergence},
        {"Selection history shape", history_shape},
        {"Two-qubit amplitude table", amplitude_table},
        {"Oracle equivalence", oracle_equivalence},
        {"Gradient check", gradient_check},
        {"Property suites", property_suites},
    };
    for (const auto &[name, step] : steps) {
        try {
            step();
        } catch (const std::exception &e) {
            report(name, false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace hamvqe

int main() { return hamvqe::run(); }
