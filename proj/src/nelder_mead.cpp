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

#include "hamvqe/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hamvqe {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             const NelderMeadOptions &options) {
    const std::size_t n = x0.size();
    NelderMeadResult result;
    std::size_t evals = 0;
    struct BudgetSpent {};
    std::vector<double> best_x = x0;
    double best_f = std::numeric_limits<double>::infinity();
    auto eval = [&](const std::vector<double> &x) {
        if (evals >= options.max_evals && n > 0) {
            throw BudgetSpent{};
        }
        ++evals;
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
        return v;
    };

    if (n == 0) {
        result.f = eval(x0);
        result.x = std::move(x0);
        result.evaluations = evals;
        result.converged = true;
        return result;
    }

    const double dn = static_cast<double>(n);
    double reflect = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;
    if (options.adaptive) {
        expand = 1.0 + 2.0 / dn;
        contract = 0.75 - 1.0 / (2.0 * dn);
        shrink = 1.0 - 1.0 / dn;
    }

    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    bool converged = false;
    try {
        vals[0] = eval(pts[0]);
        for (std::size_t i = 0; i < n; ++i) {
            pts[i + 1][i] += options.initial_step;
            vals[i + 1] = eval(pts[i + 1]);
        }

        std::vector<std::size_t> order(n + 1);
        std::vector<double> centroid(n), trial(n), trial2(n);
        auto sort_simplex = [&] {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            std::vector<std::vector<double>> p2(n + 1);
            std::vector<double> v2(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                p2[k] = std::move(pts[order[k]]);
                v2[k] = vals[order[k]];
            }
            pts.swap(p2);
            vals.swap(v2);
        };
        auto along = [&](const std::vector<double> &from, double t, std::vector<double> &out) {
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = centroid[i] + t * (from[i] - centroid[i]);
            }
        };

        while (true) {
            sort_simplex();
            double xspread = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    xspread = std::max(xspread, std::abs(pts[k][i] - pts[0][i]));
                }
            }
            if (vals[n] - vals[0] <= options.ftol && xspread <= options.xtol) {
                converged = true;
                break;
            }
            if (evals >= options.max_evals) {
                break;
            }

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    centroid[i] += pts[k][i];
                }
            }
            for (double &c : centroid) {
                c /= dn;
            }

            along(pts[n], -reflect, trial);
            const double fr = eval(trial);
            if (fr < vals[0]) {
                along(pts[n], -reflect * expand, trial2);
                const double fe = eval(trial2);
                if (fe < fr) {
                    pts[n] = trial2;
                    vals[n] = fe;
                } else {
                    pts[n] = trial;
                    vals[n] = fr;
                }
                continue;
            }
            if (fr < vals[n - 1]) {
                pts[n] = trial;
                vals[n] = fr;
                continue;
            }
            if (fr < vals[n]) {
                along(pts[n], -reflect * contract, trial2);
                const double fc = eval(trial2);
                if (fc <= fr) {
                    pts[n] = trial2;
                    vals[n] = fc;
                    continue;
                }
            } else {
                along(pts[n], contract, trial2);
                const double fc = eval(trial2);
                if (fc < vals[n]) {
                    pts[n] = trial2;
                    vals[n] = fc;
                    continue;
                }
            }
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    pts[k][i] = pts[0][i] + shrink * (pts[k][i] - pts[0][i]);
                }
                vals[k] = eval(pts[k]);
            }
        }
    } catch (const BudgetSpent &) {
    }

    result.x = converged ? pts[0] : best_x;
    result.f = converged ? vals[0] : best_f;
    result.evaluations = evals;
    result.converged = converged;
    return result;
}

}  // namespace hamvqe
