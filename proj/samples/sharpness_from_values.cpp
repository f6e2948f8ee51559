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

// Simulates three elegant-functional Bobs on the optimal qubit model and
// recovers their sharpness from the values alone.

#include <cstdio>
#include <vector>

#include "seqbell/seqbell.hpp"

int main() {
    using namespace seqbell;
    const std::vector<double> lambdas{0.644, 0.763, 1.0};
    const auto t = run_sequence(elegant_optimal_model(2), lambdas);
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        std::printf("Bob%zu  lambda=%.3f  value=%.6f\n", k + 1, lambdas[k], t.values[k]);
    }

    const auto r = certify_elegant_triple(t.values[0], t.values[1], t.values[2]);
    for (const auto &e : r.lambda_estimates) std::printf("estimate lambda%zu = %.6f\n", e.index, e.value);
    for (const auto &i : r.lambda_intervals) {
        std::printf("interval lambda%zu in [%.6f, %.6f]\n", i.index, i.range.lower, i.range.upper);
    }
    std::printf("consistent=%s residual=%.2e\n", r.consistent ? "true" : "false", r.residual);
}
