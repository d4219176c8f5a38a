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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamvqe/commands.hpp"
#include "hamvqe/error.hpp"
#include "hamvqe/hamiltonian_io.hpp"

namespace {

using namespace hamvqe;

std::string one_line(std::string s) {
    for (char &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("E_IO", "cannot write " + path);
    }
    out << text;
}

QubitHamiltonian load(const std::string &path) {
    QubitHamiltonian h = load_hamiltonian(path);
    if (h.merged_duplicates() > 0) {
        std::cerr << "warning[W_DUPLICATE]: " << path << ": merged " << h.merged_duplicates()
                  << " repeated Pauli string(s) into earlier terms\n";
    }
    return h;
}

struct Common {
    std::string hamiltonian;
    std::string family = "qaoa";
    std::vector<std::string> terms;
    std::size_t layers = 1;
    std::uint64_t seed = 7;
    std::size_t restarts = 0;  // 0 keeps the per-command default
    std::size_t jobs = 1;
    std::string out;
};

void add_optimizer_flags(CLI::App *cmd, Common &c, bool &refine) {
    cmd->add_option("--seed", c.seed, "Random seed for restarts")->capture_default_str();
    cmd->add_option("--restarts", c.restarts, "Optimizer restarts per minimization");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--refine", refine, "Polish each optimum with BFGS on exact gradients");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hamiltonian-term variational eigensolver toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hamvqe 1.0.0");

    Common c;
    bool refine = false;
    bool z_in_software = true;
    bool verbose = false;

    // exact
    auto *exact = app.add_subcommand("exact", "Ground energy by Lanczos");
    exact->add_option("--hamiltonian", c.hamiltonian, "Hamiltonian file")->required();
    exact->add_option("--out", c.out, "Report file (default stdout)");

    // solve
    auto *solve = app.add_subcommand("solve", "Optimize a fixed ansatz");
    solve->add_option("--hamiltonian", c.hamiltonian, "Hamiltonian file")->required();
    solve->add_option("--family", c.family, "Ansatz family")
        ->check(CLI::IsMember({"qaoa", "imag"}))->capture_default_str();
    solve->add_option("--terms", c.terms, "Pauli strings or term indices, comma separated")
        ->delimiter(',');
    solve->add_option("--layers", c.layers, "Layers P")->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_optimizer_flags(solve, c, refine);
    solve->add_option("--out", c.out, "Report file (default stdout)");

    // select
    double target_gap = kChemicalAccuracy;
    std::size_t max_terms = 0;
    std::string history_path;
    bool no_prune = false;
    bool freeze = false;
    auto *select = app.add_subcommand("select", "Greedy term selection");
    select->add_option("--hamiltonian", c.hamiltonian, "Hamiltonian file")->required();
    select->add_option("--family", c.family, "Ansatz family")
        ->check(CLI::IsMember({"qaoa", "imag"}))->capture_default_str();
    select->add_option("--layers", c.layers, "Layers P")->check(CLI::PositiveNumber)
        ->capture_default_str();
    select->add_option("--target-gap", target_gap, "Stop once E - E0 <= this (Hartree)")
        ->check(CLI::PositiveNumber)->capture_default_str();
    select->add_option("--max-terms", max_terms, "Round limit (0: all terms)");
    add_optimizer_flags(select, c, refine);
    select->add_flag("--no-prune", no_prune, "Let the qaoa family pick I/Z-only terms");
    select->add_flag("--freeze", freeze, "Optimize only the newest term's parameters");
    select->add_option("--history", history_path, "Tab-separated history file");
    select->add_option("--out", c.out, "Report file (default stdout)");
    select->add_flag("--verbose", verbose, "Print each round to stderr");

    // compile
    std::string raw_pauli;
    std::vector<double> angles;
    std::string circuit_path;
    auto *compile = app.add_subcommand("compile", "Lower an ansatz or a Pauli exponential to gates");
    auto *h_opt = compile->add_option("--hamiltonian", c.hamiltonian, "Hamiltonian file");
    auto *p_opt = compile->add_option("--pauli", raw_pauli, "Compile exp(-i angle P) for this string");
    h_opt->excludes(p_opt);
    compile->add_option("--family", c.family, "Ansatz family")
        ->check(CLI::IsMember({"qaoa", "imag"}))->capture_default_str();
    compile->add_option("--terms", c.terms, "Pauli strings or term indices, comma separated")
        ->delimiter(',');
    compile->add_option("--layers", c.layers, "Layers P")->check(CLI::PositiveNumber)
        ->capture_default_str();
    compile->add_option("--angles,--angle", angles,
                        "Parameter values, comma separated (one value is broadcast)")
        ->delimiter(',');
    compile->add_flag("--z-in-software,!--no-z-in-software", z_in_software,
                      "Drive Z rotations as software frame changes")
        ->capture_default_str();
    compile->add_option("--circuit", circuit_path, "Write the gate list here");
    compile->add_option("--out", c.out, "Report file (default stdout)");

    // fig3
    double t_min = 0.0;
    double t_max = std::numbers::pi / 2;
    std::size_t steps = 101;
    auto *fig3 = app.add_subcommand("fig3", "Two-qubit amplitude table, CSV");
    fig3->add_option("--t-min", t_min)->capture_default_str();
    fig3->add_option("--t-max", t_max)->capture_default_str();
    fig3->add_option("--steps", steps)->check(CLI::PositiveNumber)->capture_default_str();
    fig3->add_option("--out", c.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error[E_USAGE]: " << one_line(e.what()) << "\n";
        return 2;
    }

    OptimizerConfig optimizer;
    optimizer.seed = c.seed;
    optimizer.gradient_refinement = refine;
    optimizer.jobs = c.jobs;

    try {
        if (*exact) {
            const QubitHamiltonian h = load(c.hamiltonian);
            write_text(c.out, cli::cmd_exact(h).dump(2) + "\n");
        } else if (*solve) {
            const QubitHamiltonian h = load(c.hamiltonian);
            if (c.restarts > 0) {
                optimizer.restarts = c.restarts;
            }
            cli::SolveOptions o{parse_family(c.family), c.terms, c.layers, optimizer};
            write_text(c.out, cli::cmd_solve(h, o).dump(2) + "\n");
        } else if (*select) {
            const QubitHamiltonian h = load(c.hamiltonian);
            cli::SelectOptions o;
            o.family = parse_family(c.family);
            o.layers = c.layers;
            o.target_gap = target_gap;
            o.max_terms = max_terms;
            o.selection.optimizer = optimizer;
            o.selection.optimizer.jobs = 1;
            o.selection.optimizer.restarts = c.restarts > 0 ? c.restarts : 1;
            o.selection.prune_diagonal = !no_prune;
            o.selection.freeze_previous = freeze;
            o.selection.jobs = c.jobs;
            if (verbose) {
                std::size_t k = 0;
                o.selection.on_round = [&k](const SelectionRound &r) {
                    std::fprintf(stderr, "round %zu: %s energy %.12g gap %.6g\n", ++k,
                                 r.chosen_pauli.str().c_str(), r.best_energy,
                                 r.energy_gap_to_exact);
                };
            }
            const cli::SelectOutput res = cli::cmd_select(h, o);
            if (!history_path.empty()) {
                write_text(history_path, res.history);
            }
            write_text(c.out, res.report.dump(2) + "\n");
        } else if (*compile) {
            cli::CompileOutput res;
            if (!raw_pauli.empty()) {
                if (angles.size() > 1) {
                    throw ValidationError("a bare Pauli string takes a single --angle");
                }
                res = cli::cmd_compile_pauli(PauliString::parse(raw_pauli),
                                             angles.empty() ? 0.0 : angles.front());
            } else if (!c.hamiltonian.empty()) {
                const QubitHamiltonian h = load(c.hamiltonian);
                cli::CompileOptions o{parse_family(c.family), c.terms, c.layers, angles,
                                      z_in_software};
                res = cli::cmd_compile(h, o);
            } else {
                throw ValidationError("compile needs --hamiltonian or --pauli");
            }
            if (circuit_path.empty()) {
                res.report["circuit"] = res.circuit;
            } else {
                write_text(circuit_path, res.circuit);
                res.report["circuit_file"] = circuit_path;
            }
            write_text(c.out, res.report.dump(2) + "\n");
        } else if (*fig3) {
            write_text(c.out, cli::cmd_fig3(t_min, t_max, steps));
        }
    } catch (const Error &e) {
        std::cerr << "error[" << e.code() << "]: " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error[E_INTERNAL]: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}
