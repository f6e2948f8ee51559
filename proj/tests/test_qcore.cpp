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

#include <random>

#include "seqbell/models.hpp"
#include "seqbell/qcore.hpp"
#include "test_util.hpp"

namespace seqbell {
namespace {

Operator diag(std::initializer_list<double> v) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) m(i, i) = x, ++i;
    return Operator(m);
}

// |φ⁺⟩ = (|00⟩ + |11⟩)/√2 written out by hand.
BipartiteState phi_plus() {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return BipartiteState::pure(2, psi);
}

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_LE((tensor(Operator::identity(2), Operator::identity(2)) - Operator::identity(4)).max_abs_entry(), 0.0);
}

TEST(Tensor, LeftFactorIsSlowIndex) {
    EXPECT_LE((tensor(diag({1, -1}), Operator::identity(2)) - diag({1, 1, -1, -1})).max_abs_entry(), 0.0);
}

TEST(Tensor, XXOnPhiPlusIsOne) { EXPECT_NEAR(expectation(phi_plus(), tensor(pauli_x(), pauli_x())), 1.0, 1e-12); }

TEST(Tensor, DimensionLimit) {
    EXPECT_THROW(tensor(Operator::identity(8), Operator::identity(16)), DimensionLimitError);
    EXPECT_NO_THROW(tensor(Operator::identity(8), Operator::identity(8)));
    EXPECT_NO_THROW(tensor(Operator::identity(8), Operator::identity(16), 128));
}

TEST(PartialTrace, MaximallyEntangledGivesMaximallyMixed) {
    for (std::size_t d : {2u, 3u, 4u}) {
        const auto rho = max_entangled_state(d);
        const Operator mixed = (1.0 / static_cast<double>(d)) * Operator::identity(d);
        EXPECT_LE((partial_trace(rho, Side::A) - mixed).max_abs_entry(), 1e-12);
        EXPECT_LE((partial_trace(rho, Side::B) - mixed).max_abs_entry(), 1e-12);
    }
}

TEST(PartialTrace, ProductState) {
    std::mt19937_64 rng(7);
    const Operator sigma = testutil::random_density(2, rng);
    const Operator tau = testutil::random_density(2, rng);
    const BipartiteState rho(2, tensor(sigma, tau));
    EXPECT_LE((partial_trace(rho, Side::A) - tau).max_abs_entry(), 1e-12);
    EXPECT_LE((partial_trace(rho, Side::B) - sigma).max_abs_entry(), 1e-12);
}

TEST(PartialTrace, TracePreservingFuzz) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = i % 2 == 0 ? 2 : 4;
        const BipartiteState rho(d, testutil::random_density(d * d, rng));
        for (Side s : {Side::A, Side::B}) {
            EXPECT_NEAR(partial_trace(rho, s).trace().real(), 1.0, 1e-12);
        }
    }
}

TEST(Expectation, IdentityIsOne) {
    std::mt19937_64 rng(3);
    const BipartiteState rho(2, testutil::random_density(4, rng));
    EXPECT_NEAR(expectation(rho, Operator::identity(4)), 1.0, 1e-12);
}

TEST(Expectation, MaximallyMixedKillsTraceless) {
    const BipartiteState mixed(2, 0.25 * Operator::identity(4));
    EXPECT_NEAR(expectation(mixed, tensor(pauli_z(), pauli_y())), 0.0, 1e-15);
    EXPECT_NEAR(expectation(mixed, tensor(pauli_x(), Operator::identity(2))), 0.0, 1e-15);
}

TEST(Expectation, RejectsNonHermitian) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 1) = 1.0;
    EXPECT_THROW(expectation(phi_plus(), Operator(m)), ContractViolation);
}

TEST(Expectation, RejectsDimensionMismatch) {
    EXPECT_THROW(expectation(phi_plus(), Operator::identity(2)), ContractViolation);
}

TEST(Anticommutator, Paulis) {
    EXPECT_LE(anticommutator(pauli_x(), pauli_z()).max_abs_entry(), 0.0);
    const Operator o = pauli_y() + 0.5 * pauli_z();
    EXPECT_LE((anticommutator(Operator::identity(2), o) - 2.0 * o).max_abs_entry(), 1e-15);
}

TEST(Anticommutator, ElegantAliceRelations) {
    const auto m = elegant_optimal_model(2);
    const Operator id = Operator::identity(2);
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_LE((anticommutator(m.alice[0].op(), m.alice[i].op()) - (2.0 / 3.0) * id).max_abs_entry(), 1e-10);
        for (std::size_t j = i + 1; j < 4; ++j) {
            EXPECT_LE((anticommutator(m.alice[i].op(), m.alice[j].op()) + (2.0 / 3.0) * id).max_abs_entry(), 1e-10);
        }
    }
}

TEST(Dichotomic, RejectsBadOperators) {
    EXPECT_THROW(DichotomicObservable(0.5 * pauli_x()), ContractViolation);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(DichotomicObservable(Operator(m)), ContractViolation);
    EXPECT_NO_THROW(DichotomicObservable{pauli_x()});
}

TEST(Dichotomic, GeneratedObservablesSquareToIdentity) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int i = 0; i < 100; ++i) {
        const auto o = bloch_observable({g(rng), g(rng), g(rng)});
        EXPECT_LE((o.op() * o.op() - Operator::identity(2)).max_abs_entry(), 1e-10);
        const auto e = embed(o, 2);
        EXPECT_LE((e.op() * e.op() - Operator::identity(4)).max_abs_entry(), 1e-10);
    }
    EXPECT_THROW(bloch_observable({0, 0, 0}), DomainError);
}

TEST(State, InvariantsEnforced) {
    EXPECT_THROW(BipartiteState(2, Operator::identity(4)), ConstructionError);  // trace 4
    EXPECT_THROW(BipartiteState(2, Operator::identity(2)), ContractViolation);
    const Operator neg = 0.5 * tensor(Operator::identity(2), Operator::identity(2)) -
                         0.25 * tensor(Operator::identity(2), Operator::identity(2)) +
                         0.75 * tensor(pauli_z(), pauli_z());
    EXPECT_THROW(BipartiteState(2, neg), ConstructionError);
}

TEST(MakeMaxEntangled, SignedPauliFamily) {
    const std::array<DichotomicObservable, 3> paulis{DichotomicObservable(pauli_x()), DichotomicObservable(pauli_y()),
                                                     DichotomicObservable(pauli_z())};
    const auto rho = make_max_entangled(paulis, 2);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-10);
    const auto ev = rho.op().eigenvalues();
    EXPECT_NEAR(ev.maxCoeff(), 1.0, 1e-10);
    EXPECT_NEAR(ev.minCoeff(), 0.0, 1e-10);
    const Operator half = 0.5 * Operator::identity(2);
    EXPECT_LE((partial_trace(rho, Side::A) - half).max_abs_entry(), 1e-12);
    EXPECT_LE((partial_trace(rho, Side::B) - half).max_abs_entry(), 1e-12);
    // The sign search keeps the first family member positively correlated.
    EXPECT_NEAR(std::abs(expectation(rho, tensor(paulis[0].op(), paulis[0].op()))), 1.0, 1e-12);
    int positive = 0;
    for (const auto &p : paulis) positive += expectation(rho, tensor(p.op(), p.op())) > 0.5;
    EXPECT_EQ(positive, 2);
}

TEST(MakeMaxEntangled, RejectsIncompleteFamily) {
    const std::array<DichotomicObservable, 2> two{DichotomicObservable(pauli_x()), DichotomicObservable(pauli_z())};
    try {
        make_max_entangled(two, 2);
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError &e) {
        EXPECT_NE(std::string(e.what()).find("not"), std::string::npos);
    }
}

TEST(MakeMaxEntangled, RejectsCommutingFamily) {
    const std::array<DichotomicObservable, 3> bad{DichotomicObservable(pauli_x()), DichotomicObservable(pauli_x()),
                                                  DichotomicObservable(pauli_z())};
    EXPECT_THROW(make_max_entangled(bad, 2), ContractViolation);
}

TEST(Interleave, RegroupsTensorFactors) {
    std::mt19937_64 rng(9);
    const BipartiteState rho(2, testutil::random_density(4, rng));
    const auto sigma = max_entangled_state(2);
    const auto joint = interleave(rho, sigma);
    EXPECT_EQ(joint.local_dim(), 4u);
    // (A ⊗ I) on Alice and (B ⊗ I) on Bob see only rho.
    const Operator a = embed(pauli_x(), 2), b = embed(pauli_z(), 2);
    EXPECT_NEAR(expectation(joint, tensor(a, b)), expectation(rho, tensor(pauli_x(), pauli_z())), 1e-12);
}

}  // namespace
}  // namespace seqbell
