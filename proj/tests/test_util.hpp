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

#pragma once

#include <random>
#include <vector>

#include "seqbell/qcore.hpp"

namespace testutil {

/// G G† / Tr[G G†] for a complex Gaussian G: full-rank random density matrix.
inline seqbell::Operator random_density(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const auto n = static_cast<Eigen::Index>(d);
    seqbell::Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = seqbell::Complex(g(rng), g(rng));
    seqbell::Matrix rho = m * m.adjoint();
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return seqbell::Operator(rho);
}

inline std::vector<double> grid(std::size_t n) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

}  // namespace testutil
