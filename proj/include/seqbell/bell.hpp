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

// Bell functionals and the sequential protocol runner.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqbell/instruments.hpp"
#include "seqbell/models.hpp"
#include "seqbell/qcore.hpp"

namespace seqbell {

enum class FunctionalKind { Chsh, Elegant };

inline std::string_view to_string(FunctionalKind k) { return k == FunctionalKind::Chsh ? "chsh" : "elegant"; }

inline FunctionalKind parse_functional(std::string_view s) {
    if (s == "chsh") return FunctionalKind::Chsh;
    if (s == "elegant") return FunctionalKind::Elegant;
    throw DomainError("unknown functional '" + std::string(s) + "'");
}

/// Σ_{i,j} c_ij A_i ⊗ B_j with c_ij ∈ {±1}. Rows are indexed by Bob's setting.
struct BellFunctional {
    FunctionalKind kind;
    std::vector<std::vector<int>> by_bob;

    static BellFunctional chsh() { return {FunctionalKind::Chsh, {{1, 1}, {1, -1}}}; }

    static BellFunctional elegant() {
        return {FunctionalKind::Elegant, {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}}};
    }

    static BellFunctional of(FunctionalKind k) { return k == FunctionalKind::Chsh ? chsh() : elegant(); }

    std::size_t alice_settings() const { return by_bob.front().size(); }
    std::size_t bob_settings() const { return by_bob.size(); }
    int coefficient(std::size_t alice, std::size_t bob) const { return by_bob.at(bob).at(alice); }

    /// Σ_i c_ij A_i, the Alice-side operator paired with Bob's setting j.
    Operator alice_combination(std::span<const DichotomicObservable> alice, std::size_t bob) const {
        Operator out = Operator::zero(alice.front().dim());
        for (std::size_t i = 0; i < alice.size(); ++i) {
            out += static_cast<double>(coefficient(i, bob)) * alice[i].op();
        }
        return out;
    }
};

namespace detail {

inline void check_counts(const BellFunctional &f, std::size_t na, std::size_t nb) {
    if (na != f.alice_settings() || nb != f.bob_settings()) {
        throw ContractViolation("Bell functional " + std::string(to_string(f.kind)) + " expects " +
                                std::to_string(f.alice_settings()) + "x" + std::to_string(f.bob_settings()) +
                                " settings, got " + std::to_string(na) + "x" + std::to_string(nb));
    }
}

}  // namespace detail

inline Operator bell_operator(const BellFunctional &f, std::span<const DichotomicObservable> alice,
                              std::span<const DichotomicObservable> bob) {
    detail::check_counts(f, alice.size(), bob.size());
    const std::size_t d = alice.front().dim();
    Operator out = Operator::zero(d * d);
    for (std::size_t j = 0; j < bob.size(); ++j) {
        out += tensor(f.alice_combination(alice, j), bob[j].op());
    }
    return out;
}

/// λ · Tr[(A⊗B)ρ].
inline double correlator(const BipartiteState &rho, const DichotomicObservable &a, const DichotomicObservable &b,
                         double lambda) {
    check_lambda(lambda, "correlator");
    return lambda * expectation(rho, tensor(a.op(), b.op()));
}

struct SequentialTranscript {
    std::vector<double> values;
    std::vector<double> lambdas;
};

inline constexpr std::size_t kMaxObservers = 4;

/// Alice shares `state` with Bob₁; every Bob measures the same settings with
/// his own sharpness λ_k and relays the averaged state. Entry k of the
/// transcript is λ_k · Tr[ρ_{AB_k} W] for the functional's Bell operator W.
inline SequentialTranscript run_sequence(const BellFunctional &f, const BipartiteState &state,
                                         std::span<const DichotomicObservable> alice,
                                         std::span<const DichotomicObservable> bob, std::span<const double> lambdas) {
    if (lambdas.empty() || lambdas.size() > kMaxObservers) {
        throw DomainError("run_sequence: between 1 and 4 observers supported");
    }
    for (double l : lambdas) {
        check_lambda(l, "run_sequence");
    }
    const Operator w = bell_operator(f, alice, bob);
    if (w.dim() != state.op().dim()) {
        throw ContractViolation("run_sequence: state and observables dimension differ");
    }

    SequentialTranscript out{{}, {lambdas.begin(), lambdas.end()}};
    BipartiteState rho = state;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        out.values.push_back(lambdas[k] * expectation(rho, w));
        if (k + 1 < lambdas.size()) {
            rho = apply_sequential_channel(rho, UnsharpInstrument(lambdas[k], {bob.begin(), bob.end()}));
        }
    }
    return out;
}

inline SequentialTranscript run_sequence(const ChshModel &m, std::span<const double> lambdas) {
    return run_sequence(BellFunctional::chsh(), m.state, m.alice, m.bob, lambdas);
}

inline SequentialTranscript run_sequence(const ElegantModel &m, std::span<const double> lambdas) {
    return run_sequence(BellFunctional::elegant(), m.state, m.alice, m.bob, lambdas);
}

/// Largest ⟨L_j† L_j⟩ over Bob's settings, where
/// L_j = (Σ_i c_ij A_i)/ω_j ⊗ I − I ⊗ B_j and ω_j = ‖(Σ_i c_ij A_i ⊗ I)ψ‖.
/// Zero exactly when the sum-of-squares bound is tight on this model.
inline double sos_residual(const BellFunctional &f, const BipartiteState &state,
                           std::span<const DichotomicObservable> alice, std::span<const DichotomicObservable> bob) {
    detail::check_counts(f, alice.size(), bob.size());
    const std::size_t d = state.local_dim();
    const Operator id = Operator::identity(d);
    double worst = 0.0;
    for (std::size_t j = 0; j < bob.size(); ++j) {
        const Operator combo = f.alice_combination(alice, j);
        const double omega = std::sqrt(expectation(state, tensor(combo * combo, id)));
        if (omega == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        const Operator l = tensor((1.0 / omega) * combo, id) - tensor(id, bob[j].op());
        worst = std::max(worst, expectation(state, l.adjoint() * l));
    }
    return worst;
}

/// max over both sides of ‖Tr_X ρ − I/d‖∞.
inline double marginal_defect(const BipartiteState &state) {
    const std::size_t d = state.local_dim();
    const Operator mixed = (1.0 / static_cast<double>(d)) * Operator::identity(d);
    return std::max((partial_trace(state, Side::A) - mixed).max_abs_entry(),
                    (partial_trace(state, Side::B) - mixed).max_abs_entry());
}

}  // namespace seqbell
