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

// Inverting observed sequential values into sharpness estimates and intervals.
//
// Point estimates assume the tuple sits on the trade-off surface with the last
// observer sharp. Intervals only use the inequalities "value ≤ surface", so
// they stay valid for noisy data that falls inside the surface.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "seqbell/closedform.hpp"
#include "seqbell/errors.hpp"

namespace seqbell {

/// Agreement with the trade-off surface needed to call a tuple consistent.
inline constexpr double kConsistencyTolerance = 5e-3;

struct Interval {
    double lower;
    double upper;

    bool contains(double x, double slack = 0.0) const { return x >= lower - slack && x <= upper + slack; }
    double width() const { return upper - lower; }
};

struct LambdaEstimate {
    std::size_t index;
    double value;
};

struct LambdaInterval {
    std::size_t index;
    Interval range;
};

struct CertificationResult {
    std::vector<LambdaEstimate> lambda_estimates;
    std::vector<LambdaInterval> lambda_intervals;
    bool consistent = false;
    double residual = 0.0;

    std::optional<double> estimate(std::size_t index) const {
        for (const auto &e : lambda_estimates) {
            if (e.index == index) return e.value;
        }
        return std::nullopt;
    }

    std::optional<Interval> interval(std::size_t index) const {
        for (const auto &i : lambda_intervals) {
            if (i.index == index) return i.range;
        }
        return std::nullopt;
    }
};

namespace detail {

inline void check_observed(double v, double top, const char *where) {
    if (!(v >= 0.0)) {
        throw DomainError(std::string(where) + ": observed value must be non-negative, got " + std::to_string(v));
    }
    if (v > top + kBoundarySlack) {
        throw UnphysicalInputError(std::string(where) + ": observed value " + std::to_string(v) +
                                   " exceeds the quantum optimum " + std::to_string(top));
    }
}

/// √(1−s²) for a required survival s, i.e. the largest λ whose disturbance
/// leaves at least s. Empty when s > 1.
inline std::optional<double> lambda_for_survival(double s) {
    if (s <= 0.0) return 1.0;
    if (s > 1.0 + kBoundarySlack) return std::nullopt;
    return std::sqrt(std::max(0.0, 1.0 - s * s));
}

/// Interval from bounds that may touch up to rounding; nullopt if empty.
inline std::optional<Interval> make_interval(double lower, std::optional<double> upper) {
    if (!upper || lower > *upper + kBoundarySlack) return std::nullopt;
    lower = std::clamp(lower, 0.0, 1.0);
    return Interval{lower, std::max(lower, std::min(*upper, 1.0))};
}

inline Interval require(std::optional<Interval> iv, const char *where) {
    if (!iv) {
        throw InconsistencyError(std::string(where) + ": certified interval is empty");
    }
    return *iv;
}

/// 1 + (m−1)√(1−λ²), m times the shrink factor a Bob passes on.
inline double xi(double lambda, double settings) { return 1.0 + (settings - 1.0) * survival(lambda); }

inline std::optional<double> lambda_in_unit(double x) {
    if (!(x >= -kBoundarySlack && x <= 1.0 + kBoundarySlack)) return std::nullopt;
    return std::clamp(x, 0.0, 1.0);
}

// Interval bodies that report emptiness instead of throwing.

inline std::optional<Interval> chsh_interval(double b1, double b2) {
    return make_interval(b1 / kChshOptimum, lambda_for_survival(2.0 * b2 / kChshOptimum - 1.0));
}

inline std::optional<Interval> elegant_interval(double e1, double e2, double lambda2) {
    return make_interval(e1 / kElegantOptimum,
                         lambda_for_survival(0.5 * (3.0 * e2 / (lambda2 * kElegantOptimum) - 1.0)));
}

inline std::optional<Interval> elegant_interval_sequential(double e1, double e2, double e3) {
    // Bob₃'s sharp value is (E/9)ξ₁ξ₂ with ξ₂ fixed by e2 and ξ₁, and grows
    // with ξ₁; the smallest admissible ξ₁ solves ξ + 2√(ξ² − c²) = t.
    const double t = 9.0 * e3 / kElegantOptimum;
    const double c = 3.0 * e2 / kElegantOptimum;
    const double root = (-t + std::sqrt(4.0 * t * t + 12.0 * c * c)) / 3.0;
    const double xi_min = c >= t ? c : std::max(c, root);
    return make_interval(e1 / kElegantOptimum, lambda_for_survival(0.5 * (xi_min - 1.0)));
}

inline std::optional<Interval> elegant_interval_second(double e2, double e3, double lambda1) {
    const double x1 = xi(lambda1, 3.0);
    return make_interval(3.0 * e2 / (x1 * kElegantOptimum),
                         lambda_for_survival(0.5 * (9.0 * e3 / (x1 * kElegantOptimum) - 1.0)));
}

inline void push_interval(CertificationResult &r, std::size_t index, std::optional<Interval> iv) {
    if (iv) r.lambda_intervals.push_back({index, *iv});
}

}  // namespace detail

/// λ₁ ∈ [b1/E, √(1 − (2b2/E − 1)²)] from Bob₁ at b1 and Bob₂ at b2.
inline Interval chsh_lambda1_interval(double b1, double b2) {
    detail::check_observed(b1, kChshOptimum, "chsh_lambda1_interval");
    detail::check_observed(b2, kChshOptimum, "chsh_lambda1_interval");
    return detail::require(detail::chsh_interval(b1, b2), "chsh_lambda1_interval");
}

inline CertificationResult certify_chsh_pair(double b1, double b2) {
    detail::check_observed(b1, kChshOptimum, "certify_chsh_pair");
    detail::check_observed(b2, kChshOptimum, "certify_chsh_pair");
    CertificationResult r;
    const double l1 = b1 / kChshOptimum;
    r.lambda_estimates.push_back({1, std::min(l1, 1.0)});
    if (auto l2 = detail::lambda_in_unit(2.0 * b2 / (detail::xi(std::min(l1, 1.0), 2.0) * kChshOptimum))) {
        r.lambda_estimates.push_back({2, *l2});
    }
    detail::push_interval(r, 1, detail::chsh_interval(b1, b2));
    r.residual = std::abs(b2 - chsh_tradeoff(b1));
    r.consistent = r.residual <= kConsistencyTolerance;
    return r;
}

/// λ₁ ∈ [e1/E, √(1 − ¼(3e2/(λ₂E) − 1)²)] for a Bob₂ of known sharpness λ₂.
inline Interval elegant_lambda1_interval(double e1, double e2, double lambda2) {
    detail::check_observed(e1, kElegantOptimum, "elegant_lambda1_interval");
    detail::check_observed(e2, kElegantOptimum, "elegant_lambda1_interval");
    if (!(lambda2 > 0.0 && lambda2 <= 1.0)) {
        throw DomainError("elegant_lambda1_interval: lambda2 must lie in (0, 1]");
    }
    return detail::require(detail::elegant_interval(e1, e2, lambda2), "elegant_lambda1_interval");
}

/// λ₁ interval when Bob₃ is also observed at e3; Bob₂'s sharpness is left free.
inline Interval elegant_lambda1_interval_sequential(double e1, double e2, double e3) {
    detail::check_observed(e1, kElegantOptimum, "elegant_lambda1_interval_sequential");
    detail::check_observed(e2, kElegantOptimum, "elegant_lambda1_interval_sequential");
    detail::check_observed(e3, kElegantOptimum, "elegant_lambda1_interval_sequential");
    return detail::require(detail::elegant_interval_sequential(e1, e2, e3), "elegant_lambda1_interval_sequential");
}

/// λ₂ ∈ [3e2/(ξ₁E), √(1 − ¼(9e3/(ξ₁E) − 1)²)] with ξ₁ = 1 + 2√(1−λ₁²).
inline Interval elegant_lambda2_interval(double e2, double e3, double lambda1) {
    detail::check_observed(e2, kElegantOptimum, "elegant_lambda2_interval");
    detail::check_observed(e3, kElegantOptimum, "elegant_lambda2_interval");
    check_lambda(lambda1, "elegant_lambda2_interval");
    return detail::require(detail::elegant_interval_second(e2, e3, lambda1), "elegant_lambda2_interval");
}

/// Smallest λ₃ that lets Bob₃ reach e3 after Bobs of sharpness λ₁, λ₂.
inline double lambda3_min(double e3, double lambda1, double lambda2) {
    detail::check_observed(e3, kElegantOptimum, "lambda3_min");
    check_lambda(lambda1, "lambda3_min");
    check_lambda(lambda2, "lambda3_min");
    const double raw =
        9.0 * e3 / (detail::xi(lambda1, 3.0) * detail::xi(lambda2, 3.0) * kElegantOptimum);
    auto l3 = detail::lambda_in_unit(raw);
    if (!l3) {
        throw InconsistencyError("lambda3_min: required sharpness " + std::to_string(raw) + " exceeds 1");
    }
    return *l3;
}

inline CertificationResult certify_elegant_pair(double e1, double e2) {
    detail::check_observed(e1, kElegantOptimum, "certify_elegant_pair");
    detail::check_observed(e2, kElegantOptimum, "certify_elegant_pair");
    CertificationResult r;
    const double l1 = std::min(e1 / kElegantOptimum, 1.0);
    r.lambda_estimates.push_back({1, l1});
    if (auto l2 = detail::lambda_in_unit(3.0 * e2 / (detail::xi(l1, 3.0) * kElegantOptimum))) {
        r.lambda_estimates.push_back({2, *l2});
    }
    detail::push_interval(r, 1, detail::elegant_interval(e1, e2, 1.0));
    r.residual = std::abs(e2 - elegant_tradeoff2(e1));
    r.consistent = r.residual <= kConsistencyTolerance;
    return r;
}

inline CertificationResult certify_elegant_triple(double e1, double e2, double e3) {
    detail::check_observed(e1, kElegantOptimum, "certify_elegant_triple");
    detail::check_observed(e2, kElegantOptimum, "certify_elegant_triple");
    detail::check_observed(e3, kElegantOptimum, "certify_elegant_triple");
    CertificationResult r;
    const double l1 = std::min(e1 / kElegantOptimum, 1.0);
    const double raw2 = 3.0 * e2 / (detail::xi(l1, 3.0) * kElegantOptimum);
    auto l2 = detail::lambda_in_unit(raw2);
    if (!l2) {
        throw InconsistencyError("certify_elegant_triple: solved lambda2 = " + std::to_string(raw2) +
                                 " lies outside [0, 1]");
    }
    r.lambda_estimates.push_back({1, l1});
    r.lambda_estimates.push_back({2, *l2});
    const double raw3 = 9.0 * e3 / (detail::xi(l1, 3.0) * detail::xi(*l2, 3.0) * kElegantOptimum);
    if (auto l3 = detail::lambda_in_unit(raw3)) {
        r.lambda_estimates.push_back({3, *l3});
    }
    detail::push_interval(r, 1, detail::elegant_interval_sequential(e1, e2, e3));
    detail::push_interval(r, 2, detail::elegant_interval_second(e2, e3, l1));
    const std::vector<double> sharp_last{l1, *l2, 1.0};
    r.residual = std::abs(e3 - elegant_value(3, sharp_last));
    r.consistent = r.residual <= kConsistencyTolerance;
    return r;
}

}  // namespace seqbell
