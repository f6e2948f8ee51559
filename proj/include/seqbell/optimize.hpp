// Copyright 2026 The seqbell Authors
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

// Derivative-free maximisation: coordinate ascent with golden-section line
// searches, a compass-search polish, and seeded multi-restart.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace seqbell::opt {

struct AscentOptions {
    /// Stop once a full sweep (or polish round) gains less than this.
    double tolerance = 1e-10;
    int max_sweeps = 400;
    /// Half-width of the bracket searched around each coordinate.
    double bracket = std::numbers::pi / 2.0;
    double line_tolerance = 1e-9;
    double polish_step = 1e-2;
    double polish_min_step = 1e-10;
    int max_polish_rounds = 2000;
};

struct AscentResult {
    std::vector<double> x;
    double value = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

using Objective = std::function<double(const std::vector<double> &)>;

/// Maximiser of a 1-D function on [lo, hi]; returns the abscissa.
template <class F>
double golden_section_max(F &&f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? c : d;
}

inline AscentResult coordinate_ascent(const Objective &f, std::vector<double> x, const AscentOptions &o) {
    AscentResult r;
    double best = f(x);
    for (int sweep = 0; sweep < o.max_sweeps; ++sweep) {
        ++r.iterations;
        const double start = best;
        const std::vector<double> before = x;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double keep = x[i];
            auto line = [&](double t) {
                x[i] = t;
                return f(x);
            };
            const double t = golden_section_max(line, keep - o.bracket, keep + o.bracket, o.line_tolerance);
            x[i] = t;
            const double v = f(x);
            if (v > best) {
                best = v;
            } else {
                x[i] = keep;
            }
        }
        // Pattern move along the sweep's net displacement; coordinate steps
        // alone crawl along valleys that are not axis-aligned.
        std::vector<double> step(x.size());
        double norm = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            step[i] = x[i] - before[i];
            norm += step[i] * step[i];
        }
        if (norm > 0.0) {
            std::vector<double> trial(x.size());
            auto along = [&](double t) {
                for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + t * step[i];
                return f(trial);
            };
            const double t = golden_section_max(along, 0.0, 8.0, o.line_tolerance);
            const double v = along(t);
            if (v > best) {
                best = v;
                x = trial;
            }
        }
        if (best - start < o.tolerance) {
            r.converged = true;
            break;
        }
    }
    r.x = std::move(x);
    r.value = best;
    return r;
}

/// Compass search: try ±h along each axis, halve h once a round gains less
/// than the tolerance. Converged when h reaches the floor within budget.
inline AscentResult compass_polish(const Objective &f, AscentResult start, const AscentOptions &o) {
    std::vector<double> x = std::move(start.x);
    double best = start.value;
    double h = o.polish_step;
    int rounds = 0;
    while (h > o.polish_min_step && rounds < o.max_polish_rounds) {
        ++rounds;
        const double before = best;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double dir : {1.0, -1.0}) {
                const double keep = x[i];
                x[i] = keep + dir * h;
                const double v = f(x);
                if (v > best) {
                    best = v;
                    break;
                }
                x[i] = keep;
            }
        }
        if (best - before < o.tolerance) h *= 0.5;
    }
    start.x = std::move(x);
    start.value = best;
    start.iterations += rounds;
    start.converged = start.converged && h <= o.polish_min_step;
    return start;
}

/// Runs ascent + polish from `restarts` random starting points drawn by
/// `sample` and keeps the best. Iterations are summed over restarts.
template <class Sampler>
AscentResult multi_restart(const Objective &f, Sampler &&sample, int restarts, std::uint64_t seed,
                           const AscentOptions &o = {}) {
    std::mt19937_64 rng(seed);
    AscentResult best;
    int total = 0;
    for (int r = 0; r < restarts; ++r) {
        AscentResult run = compass_polish(f, coordinate_ascent(f, sample(rng), o), o);
        total += run.iterations;
        if (run.value > best.value) best = std::move(run);
    }
    best.iterations = total;
    return best;
}

}  // namespace seqbell::opt
