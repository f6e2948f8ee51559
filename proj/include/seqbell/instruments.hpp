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

// Unsharp two-outcome instruments and the measure-and-relay channel that
// carries the shared state from one Bob to the next.

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "seqbell/qcore.hpp"

namespace seqbell {

struct AlphaBeta {
    double alpha;
    double beta;
};

inline void check_lambda(double lambda, const char *where) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError(std::string(where) + ": lambda must lie in [0, 1], got " + std::to_string(lambda));
    }
}

/// Kraus coefficients of K± = αI ± βB, with α² + β² = 1/2 and α ≥ β ≥ 0.
inline AlphaBeta alpha_beta(double lambda) {
    check_lambda(lambda, "alpha_beta");
    const double p = std::sqrt((1.0 + lambda) / 2.0);
    const double m = std::sqrt((1.0 - lambda) / 2.0);
    return {0.5 * (p + m), 0.5 * (p - m)};
}

struct OutcomePair {
    Operator plus;
    Operator minus;
};

/// E± = ((1±λ)/2)Π⁺ + ((1∓λ)/2)Π⁻ with Π± the ±1 eigenprojectors of B.
inline OutcomePair povm_elements(const DichotomicObservable &b, double lambda) {
    check_lambda(lambda, "povm_elements");
    const Operator id = Operator::identity(b.dim());
    const Operator proj_plus = 0.5 * (id + b.op());
    const Operator proj_minus = 0.5 * (id - b.op());
    return {0.5 * (1.0 + lambda) * proj_plus + 0.5 * (1.0 - lambda) * proj_minus,
            0.5 * (1.0 - lambda) * proj_plus + 0.5 * (1.0 + lambda) * proj_minus};
}

/// K± = αI ± βB, the positive square roots of E±.
inline OutcomePair kraus(const DichotomicObservable &b, double lambda) {
    const auto [alpha, beta] = alpha_beta(lambda);
    const Operator id = Operator::identity(b.dim());
    return {alpha * id + beta * b.op(), alpha * id - beta * b.op()};
}

/// One Bob's device: a sharpness λ and the settings chosen uniformly at random.
class UnsharpInstrument {
  public:
    UnsharpInstrument(double lambda, std::vector<DichotomicObservable> settings)
        : lambda_(lambda), settings_(std::move(settings)) {
        check_lambda(lambda_, "UnsharpInstrument");
        if (settings_.empty()) {
            throw ContractViolation("UnsharpInstrument: no settings");
        }
        for (const auto &s : settings_) {
            if (s.dim() != settings_.front().dim()) {
                throw ContractViolation("UnsharpInstrument: settings of different dimension");
            }
        }
    }

    double lambda() const { return lambda_; }
    AlphaBeta coefficients() const { return alpha_beta(lambda_); }
    std::span<const DichotomicObservable> settings() const { return settings_; }
    std::size_t dim() const { return settings_.front().dim(); }

  private:
    double lambda_;
    std::vector<DichotomicObservable> settings_;
};

/// X -> (1/m) Σ_{y,b} (I⊗K_{b|y}) X (I⊗K_{b|y}) on a joint operator of
/// dimension d·d. The Kraus operators are Hermitian, so this map is its own
/// dual: applied to a state it is the relay channel, applied to a Bell
/// operator it is the Heisenberg-picture update.
inline Operator relay_map(const Operator &x, const UnsharpInstrument &inst) {
    const std::size_t d = inst.dim();
    if (x.dim() != d * d) {
        throw ContractViolation("relay_map: operator dimension " + std::to_string(x.dim()) +
                                " does not match instrument dimension " + std::to_string(d));
    }
    const Operator id = Operator::identity(d);
    const double m = static_cast<double>(inst.settings().size());
    Matrix acc = Matrix::Zero(x.matrix().rows(), x.matrix().cols());
    for (const auto &setting : inst.settings()) {
        const auto [kp, km] = kraus(setting, inst.lambda());
        for (const Operator *k : {&kp, &km}) {
            const Matrix lifted = tensor(id, *k).matrix();
            acc.noalias() += lifted * x.matrix() * lifted;
        }
    }
    return Operator(acc / m);
}

/// Average post-measurement state handed to the next Bob.
inline BipartiteState apply_sequential_channel(const BipartiteState &rho, const UnsharpInstrument &inst) {
    if (rho.local_dim() != inst.dim()) {
        throw ContractViolation("apply_sequential_channel: state and settings dimension differ");
    }
    Operator out = relay_map(rho.op(), inst);
    // Restore exact Hermiticity lost to rounding in the products.
    out = 0.5 * (out + out.adjoint());
    return BipartiteState(rho.local_dim(), std::move(out));
}

}  // namespace seqbell
