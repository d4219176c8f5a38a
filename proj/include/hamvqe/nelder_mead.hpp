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
#include <functional>
#include <span>
#include <vector>

namespace hamvqe {

struct NelderMeadOptions {
    /// Stop when max f - min f over the simplex is at most this ...
    double ftol = 1e-9;
    /// ... and every vertex lies within this distance (inf-norm) of the best.
    double xtol = 1e-6;
    std::size_t max_evals = 20000;
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.1;
    /// Dimension-dependent coefficients (Gao & Han); standard 1/2/0.5/0.5 otherwise.
    bool adaptive = true;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` from `x0`. The returned point is always one at which `f`
/// was evaluated, and `f` is that value.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             const NelderMeadOptions &options = {});

}  // namespace hamvqe
