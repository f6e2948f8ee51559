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

// Closed-form sequential values, bounds and trade-off curves.
//
// Each Bob after the first sees the previous Bobs' disturbance as a scalar
// shrink factor. For CHSH (two settings) that factor is (1+s)/2, for the
// elegant functional (three settings) it is (1+2s)/3, with s = √(1−λ²).

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "seqbell/bell.hpp"
#include "seqbell/errors.hpp"
#include "seqbell/instruments.hpp"

namespace seqbell {

struct BoundSet {
    double local;
    double pnc;  // preparation-noncontextual
    double quantum_opt;
};

inline constexpr double kChshOptimum = 2.0 * std::numbers::sqrt2;
inline constexpr double kElegantOptimum = 4.0 * std::numbers::sqrt3;

inline BoundSet bounds(FunctionalKind kind) {
    if (kind == FunctionalKind::Chsh) {
        return {2.0, 2.0, kChshOptimum};
    }
    return {6.0, 4.0, kElegantOptimum};
}

inline double optimum(FunctionalKind kind) { return bounds(kind).quantum_opt; }

namespace detail {

/// √(1−λ²), the undisturbed fraction left by an unsharp measurement.
inline double survival(double lambda) { return std::sqrt(1.0 - lambda * lambda); }

/// Multiplier λ_k · ∏_{i<k} (1 + (m−1)s_i)/m for m settings. A list of length
/// k−1 leaves λ_k at 1.
inline double sequential_factor(std::size_t k, std::span<const double> lambdas, double settings, const char *where) {
    if (k == 0 || k > kMaxObservers) {
        throw DomainError(std::string(where) + ": observer index must be in 1..4");
    }
    if (lambdas.size() + 1 < k) {
        throw DomainError(std::string(where) + ": need at least k-1 sharpness values");
    }
    for (double l : lambdas) {
        check_lambda(l, where);
    }
    double factor = lambdas.size() >= k ? lambdas[k - 1] : 1.0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        factor *= (1.0 + (settings - 1.0) * survival(lambdas[i])) / settings;
    }
    return factor;
}

/// Slack for values that sit on a boundary up to rounding.
inline constexpr double kBoundarySlack = 1e-9;

/// v / top clamped to [0, 1]; throws when v leaves [0, top] by more than rounding.
inline double checked_ratio(double v, double top, const char *where) {
    if (!(v >= -kBoundarySlack && v <= top + kBoundarySlack)) {
        throw DomainError(std::string(where) + ": value " + std::to_string(v) + " outside [0, " +
                          std::to_string(top) + "]");
    }
    return std::clamp(v / top, 0.0, 1.0);
}

}  // namespace detail

inline double chsh_value(std::size_t k, std::span<const double> lambdas) {
    if (k > 3) {
        throw DomainError("chsh_value: observer index must be in 1..3");
    }
    return detail::sequential_factor(k, lambdas, 2.0, "chsh_value") * kChshOptimum;
}

inline double elegant_value(std::size_t k, std::span<const double> lambdas) {
    return detail::sequential_factor(k, lambdas, 3.0, "elegant_value") * kElegantOptimum;
}

inline double sequential_value(FunctionalKind kind, std::size_t k, std::span<const double> lambdas) {
    return kind == FunctionalKind::Chsh ? chsh_value(k, lambdas) : elegant_value(k, lambdas);
}

/// Largest Bob₂ CHSH value compatible with Bob₁ observing b1.
inline double chsh_tradeoff(double b1) {
    const double r = detail::checked_ratio(b1, kChshOptimum, "chsh_tradeoff");
    return std::numbers::sqrt2 * (1.0 + std::sqrt(1.0 - r * r));
}

/// Largest Bob₂ elegant value compatible with Bob₁ observing e1.
inline double elegant_tradeoff2(double e1) {
    const double r = detail::checked_ratio(e1, kElegantOptimum, "elegant_tradeoff2");
    return 4.0 / std::numbers::sqrt3 * (1.0 + 2.0 * std::sqrt(1.0 - r * r));
}

/// Largest Bob₃ elegant value given the first two. With D = 2√(1−(e1/E)²) and
/// E = 4√3 the surface is (E/9)(1+D)(1 + 2√(1 − (3e2/((1+D)E))²)).
inline double elegant_tradeoff3(double e1, double e2) {
    const double cap = elegant_tradeoff2(e1);
    const double r1 = detail::checked_ratio(e1, kElegantOptimum, "elegant_tradeoff3");
    const double r2 = detail::checked_ratio(e2, cap, "elegant_tradeoff3");
    const double disturb = 2.0 * std::sqrt(1.0 - r1 * r1);
    return kElegantOptimum / 9.0 * (1.0 + disturb) * (1.0 + 2.0 * std::sqrt(1.0 - r2 * r2));
}

}  // namespace seqbell
