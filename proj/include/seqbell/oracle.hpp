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

// Brute-force checks of the closed forms: numerical maximisation over
// parametrised models, and operator identities for the effective observables
// that later Bobs see through the relay channel.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "seqbell/bell.hpp"
#include "seqbell/closedform.hpp"
#include "seqbell/instruments.hpp"
#include "seqbell/models.hpp"
#include "seqbell/optimize.hpp"
#include "seqbell/qcore.hpp"

namespace seqbell {

struct Residual {
    std::string name;
    double value;
    double bound;
    /// false: the residual must exceed `bound` (a witness that something is nonzero).
    bool at_most = true;

    bool ok() const { return at_most ? value <= bound : value > bound; }
};

struct OracleReport {
    std::string target;
    double achieved = 0.0;
    double reference = 0.0;
    double gap = 0.0;
    double tolerance = 0.0;
    std::vector<Residual> residuals;
    long iterations = 0;
    std::uint64_t seed = 0;
    bool converged = true;
    bool flagged = false;
    std::vector<std::string> notes;

    bool passed() const {
        return converged && gap <= tolerance &&
               std::all_of(residuals.begin(), residuals.end(), [](const Residual &r) { return r.ok(); });
    }

    void set(double got, double want, double tol) {
        achieved = got;
        reference = want;
        gap = std::abs(got - want);
        tolerance = tol;
    }

    /// Largest at-most residual, for reports that are pure identity checks.
    double worst_residual() const {
        double w = 0.0;
        for (const auto &r : residuals) {
            if (r.at_most) w = std::max(w, r.value);
        }
        return w;
    }
};

inline constexpr std::uint64_t kDefaultSeed = 20260415;
inline constexpr int kDefaultRestarts = 32;
inline constexpr int kMinRestarts = 8;
inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kStructureTolerance = 1e-4;

// Effective observables ----------------------------------------------------

/// Bob_{k}'s observables seen through the relay channels of the Bobs before
/// him, written out as polynomials in his sharp settings. `prior` holds the
/// sharpness of the earlier Bobs (one or two entries).
inline std::vector<Operator> effective_observables(FunctionalKind kind, std::span<const DichotomicObservable> bob,
                                                   std::span<const double> prior) {
    if (prior.empty() || prior.size() > 2) {
        throw DomainError("effective_observables: one or two earlier observers supported");
    }
    const std::size_t m = kind == FunctionalKind::Chsh ? 2 : 3;
    if (bob.size() != m) {
        throw ContractViolation("effective_observables: wrong number of settings");
    }
    const auto [a1, b1] = alpha_beta(prior[0]);
    const double a1s = a1 * a1, b1s = b1 * b1;
    const bool two = prior.size() == 2;
    const auto [a2, b2] = two ? alpha_beta(prior[1]) : AlphaBeta{0.0, 0.0};
    const double a2s = a2 * a2, b2s = b2 * b2;
    auto op = [&](std::size_t i) -> const Operator & { return bob[i].op(); };

    std::vector<Operator> out;
    for (std::size_t i = 0; i < m; ++i) {
        if (kind == FunctionalKind::Chsh) {
            const std::size_t j = 1 - i;
            const Operator sandwich = op(j) * op(i) * op(j);
            if (!two) {
                out.push_back((2 * a1s + b1s) * op(i) + b1s * sandwich);
            } else {
                const Operator five = op(i) * op(j) * op(i) * op(j) * op(i);
                out.push_back((4 * a1s * a2s + 2 * b1s * b2s) * op(i) +
                              (2 * a2s * b1s + 2 * a1s * b2s) * (op(i) + sandwich) + b1s * b2s * (sandwich + five));
            }
        } else {
            const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
            const Operator sandwiches = op(j) * op(i) * op(j) + op(k) * op(i) * op(k);
            if (!two) {
                out.push_back(2 * (a1s + b1s / 3) * op(i) + (2.0 / 3.0) * b1s * sandwiches);
            } else {
                const double p = 4 * a1s * a2s + 4 * b1s * b2s / 3 + 4 * a1s * b2s / 3 + 4 * b1s * a2s / 3;
                const double q = 4 * a1s * b2s / 3 + 4 * b1s * a2s / 3 + 4 * b1s * b2s / 9;
                const double r = 4 * b1s * b2s / 9;
                const Operator fives = op(i) * op(j) * op(i) * op(j) * op(i) + op(i) * op(k) * op(i) * op(k) * op(i) +
                                       op(k) * op(j) * op(i) * op(j) * op(k) + op(j) * op(k) * op(i) * op(k) * op(j);
                out.push_back(p * op(i) + q * sandwiches + r * fives);
            }
        }
    }
    return out;
}

/// Σ_j (Σ_i c_ij A_i) ⊗ B̂_j for arbitrary Bob-side operators B̂_j.
inline Operator bell_operator_from(const BellFunctional &f, std::span<const DichotomicObservable> alice,
                                   std::span<const Operator> bob) {
    Operator out = Operator::zero(alice.front().dim() * bob.front().dim());
    for (std::size_t j = 0; j < bob.size(); ++j) {
        out += tensor(f.alice_combination(alice, j), bob[j]);
    }
    return out;
}

/// Heisenberg-picture Bell operator for the Bob after the `prior` ones:
/// Φ₁*(Φ₂*(…(W))).
inline Operator dual_bell_operator(const BellFunctional &f, std::span<const DichotomicObservable> alice,
                                   std::span<const DichotomicObservable> bob, std::span<const double> prior) {
    Operator w = bell_operator(f, alice, bob);
    const std::vector<DichotomicObservable> settings(bob.begin(), bob.end());
    for (auto it = prior.rbegin(); it != prior.rend(); ++it) {
        w = relay_map(w, UnsharpInstrument(*it, settings));
    }
    return w;
}

namespace detail {

inline double max_pair_anticommutator(std::span<const Operator> ops) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            worst = std::max(worst, anticommutator(ops[i], ops[j]).max_abs_entry());
        }
    }
    return worst;
}

inline std::vector<Operator> ops_of(std::span<const DichotomicObservable> obs) {
    std::vector<Operator> out;
    for (const auto &o : obs) out.push_back(o.op());
    return out;
}

/// Bloch vector of a qubit operator: n_k = ½Tr[B σ_k].
inline Bloch bloch_of(const Operator &b) {
    const std::array<Operator, 3> s{pauli_x(), pauli_y(), pauli_z()};
    Bloch n{};
    for (int k = 0; k < 3; ++k) n[k] = 0.5 * (b * s[k]).trace().real();
    return n;
}

inline double angle_between(const Bloch &u, const Bloch &v) {
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    const double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    const double nv = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return std::acos(std::clamp(dot / (nu * nv), -1.0, 1.0));
}

/// Rotates `target` by `angle` toward `toward` within their common plane.
inline Bloch rotate_toward(const Bloch &target, const Bloch &toward, double angle) {
    const double dot = target[0] * toward[0] + target[1] * toward[1] + target[2] * toward[2];
    Bloch perp{toward[0] - dot * target[0], toward[1] - dot * target[1], toward[2] - dot * target[2]};
    const double np = std::sqrt(perp[0] * perp[0] + perp[1] * perp[1] + perp[2] * perp[2]);
    Bloch out{};
    for (int k = 0; k < 3; ++k) out[k] = std::cos(angle) * target[k] + std::sin(angle) * perp[k] / np;
    return out;
}

/// Qubit-level view of a d=4 marginal: d=2 states pass through, d=4 states
/// drop the embedded ancilla factor.
inline Operator qubit_marginal(const BipartiteState &rho, Side traced) {
    Operator m = partial_trace(rho, traced);
    if (rho.local_dim() == 4) m = partial_trace(m, 2, 2, Side::B);
    return m;
}

inline double qubit_marginal_defect(const BipartiteState &rho) {
    const Operator half = 0.5 * Operator::identity(2);
    return std::max((qubit_marginal(rho, Side::A) - half).max_abs_entry(),
                    (qubit_marginal(rho, Side::B) - half).max_abs_entry());
}

inline Bloch unit_from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Decodes the search vector: (θ, φ) per setting for Alice then Bob, then the
/// Schmidt angles of the shared pure state (one at d=2, three at d=4).
/// Observables at d=4 act as n·σ ⊗ I₂.
struct ParametrizedModel {
    std::size_t d;
    std::size_t na;
    std::size_t nb;

    std::size_t size() const { return 2 * (na + nb) + (d == 2 ? 1 : 3); }

    DichotomicObservable setting(const std::vector<double> &x, std::size_t slot) const {
        DichotomicObservable q = bloch_observable(unit_from_angles(x[2 * slot], x[2 * slot + 1]));
        return d == 2 ? q : embed(q, 2);
    }

    std::vector<DichotomicObservable> alice(const std::vector<double> &x) const {
        std::vector<DichotomicObservable> out;
        for (std::size_t i = 0; i < na; ++i) out.push_back(setting(x, i));
        return out;
    }

    std::vector<DichotomicObservable> bob(const std::vector<double> &x) const {
        std::vector<DichotomicObservable> out;
        for (std::size_t j = 0; j < nb; ++j) out.push_back(setting(x, na + j));
        return out;
    }

    Vector state(const std::vector<double> &x) const {
        const std::size_t base = 2 * (na + nb);
        std::vector<double> c;
        if (d == 2) {
            c = {std::cos(x[base]), std::sin(x[base])};
        } else {
            const double a = x[base], b = x[base + 1], g = x[base + 2];
            c = {std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b) * std::cos(g),
                 std::sin(a) * std::sin(b) * std::sin(g)};
        }
        Vector psi = Vector::Zero(static_cast<Eigen::Index>(d * d));
        for (std::size_t k = 0; k < d; ++k) psi(static_cast<Eigen::Index>(k * d + k)) = c[k];
        return psi;
    }
};

}  // namespace detail

// Maximisation -------------------------------------------------------------

/// Maximises Bob_k's value over both parties' settings and the shared pure
/// state, all Bobs sharing one set of settings, and compares with the closed
/// form. A list of k−1 sharpness values leaves λ_k at 1.
inline OracleReport maximize_sequential(FunctionalKind kind, std::size_t k, std::span<const double> lambdas,
                                        std::size_t local_dim = 2, int restarts = kDefaultRestarts,
                                        std::uint64_t seed = kDefaultSeed) {
    if (k == 0 || k > 3) throw DomainError("maximize_sequential: k must be in 1..3");
    if (restarts < kMinRestarts) throw DomainError("maximize_sequential: at least 8 restarts required");
    if (local_dim != 2 && local_dim != 4) throw DomainError("maximize_sequential: local_dim must be 2 or 4");
    const double reference = sequential_value(kind, k, lambdas);
    std::vector<double> chain(lambdas.begin(), lambdas.begin() + static_cast<std::ptrdiff_t>(k - 1));
    const double last = lambdas.size() >= k ? lambdas[k - 1] : 1.0;

    const BellFunctional f = BellFunctional::of(kind);
    const detail::ParametrizedModel pm{local_dim, f.alice_settings(), f.bob_settings()};

    const opt::Objective objective = [&](const std::vector<double> &x) {
        const auto alice = pm.alice(x);
        const auto bob = pm.bob(x);
        const Operator w = dual_bell_operator(f, alice, bob, chain);
        const Vector psi = pm.state(x);
        return last * (psi.adjoint() * w.matrix() * psi)(0, 0).real();
    };
    auto sample = [&](std::mt19937_64 &rng) {
        std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
        std::vector<double> x(pm.size());
        for (auto &v : x) v = u(rng);
        return x;
    };
    const opt::AscentResult best = opt::multi_restart(objective, sample, restarts, seed);

    const auto alice = pm.alice(best.x);
    const auto bob = pm.bob(best.x);
    const BipartiteState rho = BipartiteState::pure(local_dim, pm.state(best.x));
    std::vector<double> full = chain;
    full.push_back(last);
    const SequentialTranscript t = run_sequence(f, rho, alice, bob, full);

    OracleReport r;
    r.target = "maximize_" + std::string(to_string(kind)) + "_k" + std::to_string(k) + "_d" + std::to_string(local_dim);
    r.set(t.values.back(), reference, 1e-5);
    r.iterations = best.iterations;
    r.seed = seed;
    r.converged = best.converged;
    r.flagged = !best.converged;
    if (!best.converged) r.notes.push_back("best restart did not converge within the sweep budget");
    r.residuals.push_back({"simulation_vs_objective", std::abs(t.values.back() - best.value), 1e-9});
    r.residuals.push_back({"bob_anticommutator", detail::max_pair_anticommutator(detail::ops_of(bob)),
                           kStructureTolerance});
    if (kind == FunctionalKind::Chsh) {
        r.residuals.push_back({"alice_anticommutator", detail::max_pair_anticommutator(detail::ops_of(alice)),
                               kStructureTolerance});
    }
    r.residuals.push_back({"marginal", detail::qubit_marginal_defect(rho), kStructureTolerance});
    return r;
}

// Operator identities --------------------------------------------------------

namespace detail {

/// Settings with a Bob pair deliberately tilted 5° off anticommutation.
inline std::vector<DichotomicObservable> tilted_bob(FunctionalKind kind) {
    std::vector<DichotomicObservable> bob;
    if (kind == FunctionalKind::Chsh) {
        const auto m = chsh_optimal_model(2);
        bob.assign(m.bob.begin(), m.bob.end());
    } else {
        const auto m = elegant_optimal_model(2);
        bob.assign(m.bob.begin(), m.bob.end());
    }
    const std::size_t moved = bob.size() - 1;
    const Bloch tilted =
        rotate_toward(bloch_of(bob[moved].op()), bloch_of(bob[0].op()), 5.0 * std::numbers::pi / 180.0);
    bob[moved] = bloch_observable(tilted);
    return bob;
}

struct ModelSettings {
    BipartiteState state;
    std::vector<DichotomicObservable> alice;
    std::vector<DichotomicObservable> bob;
};

inline ModelSettings optimal_settings(FunctionalKind kind, std::size_t d = 2) {
    if (kind == FunctionalKind::Chsh) {
        auto m = chsh_optimal_model(d);
        return {m.state, {m.alice.begin(), m.alice.end()}, {m.bob.begin(), m.bob.end()}};
    }
    auto m = elegant_optimal_model(d);
    return {m.state, {m.alice.begin(), m.alice.end()}, {m.bob.begin(), m.bob.end()}};
}

/// Random dichotomic qubit settings, for identities that hold for any choice.
inline std::vector<DichotomicObservable> random_settings(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<DichotomicObservable> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(bloch_observable({g(rng), g(rng), g(rng)}));
    return out;
}

inline std::string lambda_tag(std::span<const double> lambdas) {
    std::string s;
    for (double l : lambdas) s += (s.empty() ? "" : ",") + std::to_string(l);
    return "[" + s + "]";
}

}  // namespace detail

/// Builds Bob_{k}'s Bell operator once through the dual channel and once from
/// the effective-observable polynomials; the two must agree entrywise.
inline OracleReport verify_effective_observables(FunctionalKind kind, std::span<const double> prior,
                                                 std::uint64_t seed = kDefaultSeed) {
    for (double l : prior) check_lambda(l, "verify_effective_observables");
    const BellFunctional f = BellFunctional::of(kind);
    OracleReport r;
    r.target = "effective_observables_" + std::string(to_string(kind)) + detail::lambda_tag(prior);
    r.seed = seed;

    auto compare = [&](std::span<const DichotomicObservable> alice, std::span<const DichotomicObservable> bob) {
        const Operator via_dual = dual_bell_operator(f, alice, bob, prior);
        const auto eff = effective_observables(kind, bob, prior);
        return (via_dual - bell_operator_from(f, alice, eff)).max_abs_entry();
    };
    const auto opt_model = detail::optimal_settings(kind);
    r.residuals.push_back({"optimal_model", compare(opt_model.alice, opt_model.bob), kIdentityTolerance});

    std::mt19937_64 rng(seed);
    const auto alice = detail::random_settings(f.alice_settings(), rng);
    const auto bob = detail::random_settings(f.bob_settings(), rng);
    r.residuals.push_back({"random_model", compare(alice, bob), kIdentityTolerance});

    if (kind == FunctionalKind::Chsh && prior.size() == 1 && prior[0] == 1.0) {
        // Sharp limit: B̃_i = ¾B_i + ¼B_jB_iB_j.
        const auto eff = effective_observables(kind, bob, prior);
        double worst = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            const Operator &bi = bob[i].op();
            const Operator &bj = bob[1 - i].op();
            worst = std::max(worst, (eff[i] - (0.75 * bi + 0.25 * (bj * bi * bj))).max_abs_entry());
        }
        r.residuals.push_back({"sharp_limit", worst, kIdentityTolerance});
    }
    r.set(r.worst_residual(), 0.0, kIdentityTolerance);
    return r;
}

/// Effective observables of anticommuting settings anticommute; a 5° tilt
/// breaks that visibly. For one CHSH step also checks the polynomial
/// {B̃₁,B̃₂} = 4α²(α²+2β²)X + β⁴X³ with X = {B₁,B₂} on the tilted settings.
inline OracleReport verify_anticommutator_reduction(FunctionalKind kind, std::span<const double> prior) {
    for (double l : prior) check_lambda(l, "verify_anticommutator_reduction");
    OracleReport r;
    r.target = "anticommutator_reduction_" + std::string(to_string(kind)) + detail::lambda_tag(prior);

    const auto model = detail::optimal_settings(kind);
    r.residuals.push_back(
        {"anticommuting", detail::max_pair_anticommutator(effective_observables(kind, model.bob, prior)),
         kIdentityTolerance});
    const auto tilted = detail::tilted_bob(kind);
    const auto eff = effective_observables(kind, tilted, prior);
    r.residuals.push_back({"tilted", detail::max_pair_anticommutator(eff), 1e-3, false});

    if (kind == FunctionalKind::Chsh && prior.size() == 1) {
        const auto [a, b] = alpha_beta(prior[0]);
        const Operator x = anticommutator(tilted[0].op(), tilted[1].op());
        const Operator poly = 4 * a * a * (a * a + 2 * b * b) * x + std::pow(b, 4) * (x * x * x);
        r.residuals.push_back(
            {"polynomial", (anticommutator(eff[0], eff[1]) - poly).max_abs_entry(), kIdentityTolerance});
    }
    r.set(r.worst_residual(), 0.0, kIdentityTolerance);
    return r;
}

/// Operator norms of the effective observables on anticommuting settings
/// against 2α₁², 4α₁²α₂², 2(α₁²−β₁²/3) and 4(α₁²−β₁²/3)(α₂²−β₂²/3).
inline OracleReport verify_norm_formulas(double lambda1, double lambda2) {
    check_lambda(lambda1, "verify_norm_formulas");
    check_lambda(lambda2, "verify_norm_formulas");
    const auto [a1, b1] = alpha_beta(lambda1);
    const auto [a2, b2] = alpha_beta(lambda2);
    const double one[] = {lambda1};
    const double two[] = {lambda1, lambda2};
    const auto chsh = detail::optimal_settings(FunctionalKind::Chsh).bob;
    const auto eleg = detail::optimal_settings(FunctionalKind::Elegant).bob;

    auto worst_gap = [](const std::vector<Operator> &ops, double want) {
        double g = 0.0;
        for (const auto &o : ops) g = std::max(g, std::abs(o.operator_norm() - want));
        return g;
    };
    const double e1 = a1 * a1 - b1 * b1 / 3.0, e2 = a2 * a2 - b2 * b2 / 3.0;

    OracleReport r;
    r.target = "norm_formulas" + detail::lambda_tag(two);
    const auto tilde = effective_observables(FunctionalKind::Chsh, chsh, one);
    r.residuals.push_back({"chsh_one_step", worst_gap(tilde, 2 * a1 * a1), kIdentityTolerance});
    r.residuals.push_back({"chsh_two_step",
                           worst_gap(effective_observables(FunctionalKind::Chsh, chsh, two), 4 * a1 * a1 * a2 * a2),
                           kIdentityTolerance});
    r.residuals.push_back({"elegant_one_step",
                           worst_gap(effective_observables(FunctionalKind::Elegant, eleg, one), 2 * e1),
                           kIdentityTolerance});
    r.residuals.push_back({"elegant_two_step",
                           worst_gap(effective_observables(FunctionalKind::Elegant, eleg, two), 4 * e1 * e2),
                           kIdentityTolerance});
    r.set(tilde[0].operator_norm(), 2 * a1 * a1, kIdentityTolerance);
    return r;
}

/// Fixes Alice, the state and Bob₁ at the CHSH optimum and lets Bob₂ pick his
/// own pair of settings; the best pair should coincide with Bob₁'s.
inline OracleReport verify_same_observables(double lambda1, int restarts = kDefaultRestarts,
                                            std::uint64_t seed = kDefaultSeed) {
    check_lambda(lambda1, "verify_same_observables");
    if (restarts < kMinRestarts) throw DomainError("verify_same_observables: at least 8 restarts required");
    const auto m = chsh_optimal_model(2);
    const BellFunctional f = BellFunctional::chsh();
    const BipartiteState rho2 =
        apply_sequential_channel(m.state, UnsharpInstrument(lambda1, {m.bob.begin(), m.bob.end()}));

    auto settings = [](const std::vector<double> &x) {
        return std::vector<DichotomicObservable>{bloch_observable(detail::unit_from_angles(x[0], x[1])),
                                                 bloch_observable(detail::unit_from_angles(x[2], x[3]))};
    };
    const opt::Objective objective = [&](const std::vector<double> &x) {
        return expectation(rho2, bell_operator(f, m.alice, settings(x)));
    };
    auto sample = [](std::mt19937_64 &rng) {
        std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
        return std::vector<double>{u(rng), u(rng), u(rng), u(rng)};
    };
    const opt::AscentResult best = opt::multi_restart(objective, sample, restarts, seed);
    const auto chosen = settings(best.x);

    OracleReport r;
    r.target = "same_observables[" + std::to_string(lambda1) + "]";
    const double lam[] = {lambda1, 1.0};
    r.set(best.value, chsh_value(2, lam), 1e-5);
    r.iterations = best.iterations;
    r.seed = seed;
    r.converged = best.converged;
    r.flagged = !best.converged;
    for (std::size_t i = 0; i < 2; ++i) {
        r.residuals.push_back({"angle_b" + std::to_string(i + 3) + "_b" + std::to_string(i + 1),
                               detail::angle_between(detail::bloch_of(chosen[i].op()), detail::bloch_of(m.bob[i].op())),
                               1e-3});
    }
    if (lambda1 < 1e-3) {
        r.flagged = true;
        r.notes.push_back("degenerate: Bob1 barely disturbs the state, so his settings carry no information");
    }
    return r;
}

/// The whole verification suite with a fixed seed.
inline std::vector<OracleReport> run_oracle_suite(std::uint64_t seed = kDefaultSeed, int restarts = kDefaultRestarts) {
    std::vector<OracleReport> out;
    const double none[] = {1.0};
    for (std::size_t d : {2u, 4u}) {
        out.push_back(maximize_sequential(FunctionalKind::Chsh, 1, none, d, restarts, seed));
        out.push_back(maximize_sequential(FunctionalKind::Elegant, 1, none, d, restarts, seed));
    }
    const double chsh_pair[] = {0.6, 1.0};
    out.push_back(maximize_sequential(FunctionalKind::Chsh, 2, chsh_pair, 2, restarts, seed));
    const double eleg_pair[] = {0.5, 1.0};
    out.push_back(maximize_sequential(FunctionalKind::Elegant, 2, eleg_pair, 2, restarts, seed));

    for (int i = 0; i <= 20; ++i) {
        const double l = i / 20.0;
        const double other = 1.0 - 0.5 * l;
        const double one[] = {l};
        const double two[] = {l, other};
        for (auto kind : {FunctionalKind::Chsh, FunctionalKind::Elegant}) {
            out.push_back(verify_effective_observables(kind, one, seed));
            out.push_back(verify_effective_observables(kind, two, seed));
            out.push_back(verify_anticommutator_reduction(kind, one));
            out.push_back(verify_anticommutator_reduction(kind, two));
        }
        out.push_back(verify_norm_formulas(l, other));
    }
    for (double l : {0.8, 1.0}) out.push_back(verify_same_observables(l, restarts, seed));
    for (auto &r : out) r.seed = seed;
    return out;
}

}  // namespace seqbell
