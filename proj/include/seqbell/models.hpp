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

// Optimal measurement models for the CHSH and elegant functionals.
//
// Local dimension 2 is the qubit realisation. Local dimension 4 is the same
// model with every observable mapped O -> O ⊗ I₂ and the state tensored with
// a second maximally entangled qubit pair, which witnesses that the optimum
// does not depend on the dimension.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>

#include "seqbell/qcore.hpp"

namespace seqbell {

struct ChshModel {
    BipartiteState state;
    std::array<DichotomicObservable, 2> alice;
    std::array<DichotomicObservable, 2> bob;

    std::size_t local_dim() const { return state.local_dim(); }
};

struct ElegantModel {
    BipartiteState state;
    std::array<DichotomicObservable, 4> alice;
    std::array<DichotomicObservable, 3> bob;

    std::size_t local_dim() const { return state.local_dim(); }
};

namespace detail {

inline Bloch scaled_sum(std::span<const Bloch> vs, std::span<const double> coeffs, double scale) {
    Bloch out{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            out[k] += scale * coeffs[i] * vs[i][k];
        }
    }
    return out;
}

/// Qubit maximally entangled state from the signed Pauli family, and the
/// diagonal of its correlation matrix Tr[ρ σ_k ⊗ σ_k].
struct QubitPair {
    BipartiteState state;
    Bloch correlation;
};

inline QubitPair qubit_pair() {
    const std::array<DichotomicObservable, 3> paulis{DichotomicObservable(pauli_x()), DichotomicObservable(pauli_y()),
                                                     DichotomicObservable(pauli_z())};
    BipartiteState rho = make_max_entangled(paulis, 2);
    Bloch t{};
    for (int k = 0; k < 3; ++k) {
        t[k] = expectation(rho, tensor(paulis[k].op(), paulis[k].op()));
    }
    return {rho, t};
}

/// Bob's Bloch vector that is perfectly correlated with Alice's direction c on the pair.
inline Bloch bob_frame(const Bloch &c, const Bloch &correlation) {
    return {correlation[0] * c[0], correlation[1] * c[1], correlation[2] * c[2]};
}

inline void check_local_dim(std::size_t local_dim) {
    if (local_dim != 2 && local_dim != 4) {
        throw DomainError("optimal model: local_dim must be 2 or 4");
    }
}

template <std::size_t N>
std::array<DichotomicObservable, N> embed_all(const std::array<DichotomicObservable, N> &obs, std::size_t ancilla) {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<DichotomicObservable, N>{embed(obs[I], ancilla)...};
    }(std::make_index_sequence<N>{});
}

}  // namespace detail

/// Four unit vectors with pairwise products +1/3 against the first and -1/3
/// among the rest, first = sum of the others: three vertices of a regular
/// tetrahedron plus the negated fourth vertex.
inline std::array<Bloch, 4> elegant_alice_directions() {
    const double s = 1.0 / std::sqrt(3.0);
    const Bloch t1{s, s, s};
    const Bloch t2{s, -s, -s};
    const Bloch t3{-s, s, -s};
    const Bloch t4{-s, -s, s};
    return {Bloch{-t4[0], -t4[1], -t4[2]}, t1, t2, t3};
}

/// Bob's three directions √3(±n₁±n₂±n₃∓n₄)/4 in Alice's frame.
inline std::array<Bloch, 3> elegant_bob_directions() {
    const auto n = elegant_alice_directions();
    const double scale = std::sqrt(3.0) / 4.0;
    constexpr std::array<std::array<double, 4>, 3> signs{{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}}};
    std::array<Bloch, 3> out{};
    for (std::size_t j = 0; j < 3; ++j) {
        out[j] = detail::scaled_sum(n, signs[j], scale);
    }
    return out;
}

inline ChshModel chsh_optimal_model(std::size_t local_dim = 2) {
    detail::check_local_dim(local_dim);
    auto [rho, corr] = detail::qubit_pair();

    // Alice in the y-z plane, where the pair is positively correlated, so Bob's
    // settings are literally (A1 ± A2)/√2.
    const Bloch a1{0.0, 0.0, 1.0};
    const Bloch a2{0.0, 1.0, 0.0};
    const double r = 1.0 / std::numbers::sqrt2;
    const Bloch plus{0.0, r, r};
    const Bloch minus{0.0, -r, r};

    ChshModel m{rho,
                {bloch_observable(a1), bloch_observable(a2)},
                {bloch_observable(detail::bob_frame(plus, corr)), bloch_observable(detail::bob_frame(minus, corr))}};
    if (local_dim == 2) {
        return m;
    }
    return ChshModel{interleave(m.state, max_entangled_state(2)), detail::embed_all(m.alice, 2),
                     detail::embed_all(m.bob, 2)};
}

inline ElegantModel elegant_optimal_model(std::size_t local_dim = 2) {
    detail::check_local_dim(local_dim);
    auto [rho, corr] = detail::qubit_pair();
    const auto n = elegant_alice_directions();
    const auto b = elegant_bob_directions();

    ElegantModel m{rho,
                   {bloch_observable(n[0]), bloch_observable(n[1]), bloch_observable(n[2]), bloch_observable(n[3])},
                   {bloch_observable(detail::bob_frame(b[0], corr)), bloch_observable(detail::bob_frame(b[1], corr)),
                    bloch_observable(detail::bob_frame(b[2], corr))}};
    if (local_dim == 2) {
        return m;
    }
    return ElegantModel{interleave(m.state, max_entangled_state(2)), detail::embed_all(m.alice, 2),
                        detail::embed_all(m.bob, 2)};
}

/// ‖A1 − A2 − A3 − A4‖∞; zero exactly when Alice's settings obey the
/// relational constraint of the elegant optimum.
inline double constraint_residual(const ElegantModel &m) {
    const auto &a = m.alice;
    return (a[0].op() - a[1].op() - a[2].op() - a[3].op()).max_abs_entry();
}

}  // namespace seqbell
