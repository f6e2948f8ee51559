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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bloch_oracle.hpp"
#include "seqbell/bell.hpp"
#include "seqbell/closedform.hpp"
#include "test_util.hpp"

namespace seqbell {
namespace {

using L = std::vector<double>;

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);

TEST(Bounds, Constants) {
    const auto c = bounds(FunctionalKind::Chsh);
    EXPECT_EQ(c.local, 2.0);
    EXPECT_EQ(c.pnc, 2.0);
    EXPECT_NEAR(c.quantum_opt, 2.828427, 1e-6);
    EXPECT_NEAR(c.quantum_opt / c.local, kS2, 1e-15);
    const auto e = bounds(FunctionalKind::Elegant);
    EXPECT_EQ(e.local, 6.0);
    EXPECT_EQ(e.pnc, 4.0);
    EXPECT_NEAR(e.quantum_opt, 6.928203, 1e-6);
    EXPECT_NEAR(kChshOptimum, 2 * kS2, 1e-15);
    EXPECT_NEAR(kElegantOptimum, 4 * kS3, 1e-15);
}

TEST(ChshValue, Examples) {
    EXPECT_NEAR(chsh_value(1, L{1.0}), 2.828427, 1e-6);
    EXPECT_NEAR(chsh_value(2, L{0.8, 1.0}), 2.262742, 1e-6);
}

TEST(ChshValue, ThirdObserverQuotedValue) {
    EXPECT_NEAR(chsh_value(3, L{1 / kS2, 0.828, 1.0}), 1.89, 5e-3);
    EXPECT_LT(chsh_value(3, L{1 / kS2, 0.828, 1.0}), 2.0);
}

TEST(ChshValue, DefaultsFinalSharpnessToOne) {
    EXPECT_DOUBLE_EQ(chsh_value(2, L{0.8}), chsh_value(2, L{0.8, 1.0}));
    EXPECT_DOUBLE_EQ(chsh_value(1, L{}), kChshOptimum);
}

TEST(ChshValue, Errors) {
    EXPECT_THROW(chsh_value(2, L{1.1, 1.0}), DomainError);
    EXPECT_THROW(chsh_value(2, L{-0.1}), DomainError);
    EXPECT_THROW(chsh_value(4, L{1, 1, 1, 1}), DomainError);
    EXPECT_THROW(chsh_value(3, L{0.5}), DomainError);
}

TEST(ChshValue, SecondObserverStrictlyDecreasing) {
    const auto g = testutil::grid(101);
    for (std::size_t i = 1; i < g.size(); ++i) {
        EXPECT_LT(chsh_value(2, L{g[i], 1.0}), chsh_value(2, L{g[i - 1], 1.0}));
        EXPECT_LT(elegant_value(2, L{g[i], 1.0}), elegant_value(2, L{g[i - 1], 1.0}));
    }
}

TEST(ChshTradeoff, Examples) {
    EXPECT_NEAR(chsh_tradeoff(2 * kS2), kS2, 1e-12);
    EXPECT_NEAR(chsh_tradeoff(8 * kS2 / 5), 8 * kS2 / 5, 1e-12);
    EXPECT_NEAR(chsh_tradeoff(0.0), 2 * kS2, 1e-12);
    EXPECT_THROW(chsh_tradeoff(2.9), DomainError);
    EXPECT_THROW(chsh_tradeoff(-0.1), DomainError);
}

TEST(ElegantValue, Examples) {
    EXPECT_NEAR(elegant_value(2, L{0.0, 1.0}), 6.928203, 1e-6);
    EXPECT_NEAR(elegant_value(1, L{0.7637}), 5.291, 5e-3);
    EXPECT_NEAR(elegant_value(4, L{0.57, 0.65, 0.78, 1.0}), 3.84, 0.01);
    EXPECT_LT(elegant_value(4, L{0.57, 0.65, 0.78, 1.0}), 4.0);
    EXPECT_THROW(elegant_value(2, L{0.5, 2.0}), DomainError);
    EXPECT_THROW(elegant_value(5, L{1, 1, 1, 1, 1}), DomainError);
}

TEST(ElegantTradeoff2, Examples) {
    EXPECT_NEAR(elegant_tradeoff2(4 * kS3), 4 / kS3, 1e-12);
    EXPECT_NEAR(elegant_tradeoff2(4 * kS3), 2.3094, 1e-4);
    EXPECT_NEAR(elegant_tradeoff2(5.291), 5.291, 5e-3);
    EXPECT_NEAR(elegant_tradeoff2(0.0), 4 * kS3, 1e-12);
    EXPECT_THROW(elegant_tradeoff2(7.0), DomainError);
}

TEST(ElegantTradeoff3, Examples) {
    EXPECT_NEAR(elegant_tradeoff3(4.462, 4.462), 4.462, 0.02);
    EXPECT_NEAR(elegant_tradeoff3(4.462, 4.462), elegant_value(3, L{0.644, 0.763, 1.0}), 0.02);
    EXPECT_THROW(elegant_tradeoff3(5.0, 6.0), DomainError);
}

TEST(ElegantTradeoff3, BlindFirstSharpSecond) {
    EXPECT_NEAR(elegant_tradeoff3(0.0, 4 * kS3), 4 * kS3, 1e-12);
}

TEST(Tradeoff, CurvesAreSecondObserverValues) {
    for (double l : testutil::grid(101)) {
        EXPECT_NEAR(chsh_tradeoff(chsh_value(1, L{l})), chsh_value(2, L{l, 1.0}), 1e-12);
        EXPECT_NEAR(elegant_tradeoff2(elegant_value(1, L{l})), elegant_value(2, L{l, 1.0}), 1e-12);
    }
}

TEST(Tradeoff, SurfaceIsThirdObserverValue) {
    for (double l1 : testutil::grid(21)) {
        for (double l2 : testutil::grid(21)) {
            if (l2 > 0.96) continue;
            const double e1 = elegant_value(1, L{l1});
            const double e2 = elegant_value(2, L{l1, l2});
            EXPECT_NEAR(elegant_tradeoff3(e1, e2), elegant_value(3, L{l1, l2, 1.0}), 1e-12);
        }
    }
}

TEST(Tradeoff, SurfaceAtSharpSecondObserver) {
    // e₂ on the boundary: √(1 − r²) turns a rounding error of 1e−16 in e₂
    // into about 1e−8, so only that much agreement is available.
    for (double l1 : testutil::grid(21)) {
        const double e1 = elegant_value(1, L{l1});
        const double e2 = elegant_value(2, L{l1, 1.0});
        EXPECT_NEAR(elegant_tradeoff3(e1, e2), elegant_value(3, L{l1, 1.0, 1.0}), 1e-6);
    }
}

TEST(Tradeoff, SurfaceMatchesChannelSimulation) {
    const auto sc = bloch::elegant();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double l1 = u(rng), l2 = u(rng);
        const auto v = bloch::sequence(sc, {l1, l2, 1.0});
        EXPECT_NEAR(elegant_tradeoff3(v[0], v[1]), v[2], 1e-9);
    }
}

TEST(SequentialValue, ProductFormMatchesBlochOracle) {
    const auto sc_c = bloch::chsh();
    const auto sc_e = bloch::elegant();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const L l{u(rng), u(rng), u(rng), u(rng)};
        const auto vc = bloch::sequence(sc_c, {l[0], l[1], l[2]});
        const auto ve = bloch::sequence(sc_e, l);
        for (std::size_t k = 1; k <= 3; ++k) EXPECT_NEAR(chsh_value(k, l), vc[k - 1], 1e-12);
        for (std::size_t k = 1; k <= 4; ++k) EXPECT_NEAR(elegant_value(k, l), ve[k - 1], 1e-12);
    }
}

TEST(SequentialValue, NoDisturbanceChain) {
    for (std::size_t k = 1; k <= 4; ++k) {
        L l(k - 1, 0.0);
        l.push_back(1.0);
        EXPECT_NEAR(elegant_value(k, l), kElegantOptimum, 1e-12);
        if (k <= 3) {
            EXPECT_NEAR(chsh_value(k, l), kChshOptimum, 1e-12);
        }
    }
}

TEST(SequentialValue, Dispatch) {
    const L l{0.3, 0.4, 0.5};
    EXPECT_EQ(sequential_value(FunctionalKind::Chsh, 3, l), chsh_value(3, l));
    EXPECT_EQ(sequential_value(FunctionalKind::Elegant, 3, l), elegant_value(3, l));
}

}  // namespace
}  // namespace seqbell
