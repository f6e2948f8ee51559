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

// Dense complex operators, bipartite states and dichotomic observables.
//
// Everything here is dimension generic. Joint spaces are ordered A ⊗ B with
// the left factor on the slower index (Kronecker convention).

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqbell/errors.hpp"

namespace seqbell {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using Bloch = std::array<double, 3>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kAlgebraic = 1e-10;
inline constexpr double kEigenFloor = 1e-10;
inline constexpr double kTrace = 1e-12;
inline constexpr double kImagResidue = 1e-10;
/// Agreement with figures quoted to three decimals.
inline constexpr double kQuoted = 5e-3;
}  // namespace tol

inline constexpr std::size_t kDefaultMaxDim = 64;

class Operator {
  public:
    Operator() = default;

    explicit Operator(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() == 0) {
            throw ContractViolation("Operator: matrix must be square and non-empty");
        }
    }

    static Operator identity(std::size_t d) { return Operator(Matrix::Identity(idx(d), idx(d))); }
    static Operator zero(std::size_t d) { return Operator(Matrix::Zero(idx(d), idx(d))); }

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix &matrix() const { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(idx(r), idx(c)); }

    /// Row-major entries, length dim².
    std::vector<Complex> entries() const {
        return std::vector<Complex>(m_.data(), m_.data() + m_.size());
    }

    Operator adjoint() const { return Operator(m_.adjoint()); }
    Complex trace() const { return m_.trace(); }

    double hermiticity_defect() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }
    bool is_hermitian(double eps = tol::kHermitian) const { return hermiticity_defect() <= eps; }

    /// max |O_ij|, the entrywise infinity norm.
    double max_abs_entry() const { return m_.cwiseAbs().maxCoeff(); }

    /// Largest singular value.
    double operator_norm() const {
        Eigen::JacobiSVD<Matrix> svd(m_);
        return svd.singularValues()(0);
    }

    /// Ascending eigenvalues of the Hermitian part.
    Eigen::VectorXd eigenvalues() const {
        Matrix h = 0.5 * (m_ + m_.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }
    double max_eigenvalue() const { return eigenvalues().maxCoeff(); }
    double min_eigenvalue() const { return eigenvalues().minCoeff(); }

    Operator &operator+=(const Operator &o) {
        check_same(o);
        m_ += o.m_;
        return *this;
    }
    Operator &operator-=(const Operator &o) {
        check_same(o);
        m_ -= o.m_;
        return *this;
    }
    Operator &operator*=(Complex s) {
        m_ *= s;
        return *this;
    }

    friend Operator operator+(Operator a, const Operator &b) { return a += b; }
    friend Operator operator-(Operator a, const Operator &b) { return a -= b; }
    friend Operator operator-(const Operator &a) { return Operator(-a.m_); }
    friend Operator operator*(const Operator &a, const Operator &b) {
        a.check_same(b);
        return Operator(a.m_ * b.m_);
    }
    friend Operator operator*(Complex s, Operator a) { return a *= s; }
    friend Operator operator*(Operator a, Complex s) { return a *= s; }
    friend Operator operator*(double s, Operator a) { return a *= Complex(s, 0.0); }
    friend Operator operator*(Operator a, double s) { return a *= Complex(s, 0.0); }

  private:
    static Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

    void check_same(const Operator &o) const {
        if (o.dim() != dim()) {
            throw ContractViolation("Operator: dimension mismatch " + std::to_string(dim()) + " vs " +
                                    std::to_string(o.dim()));
        }
    }

    Matrix m_;
};

/// Hermitian operator whose square is the identity, i.e. spectrum in {+1, -1}.
class DichotomicObservable {
  public:
    explicit DichotomicObservable(Operator op) : op_(std::move(op)) {
        if (!op_.is_hermitian()) {
            throw ContractViolation("DichotomicObservable: operator is not Hermitian");
        }
        if ((op_ * op_ - Operator::identity(op_.dim())).max_abs_entry() > tol::kAlgebraic) {
            throw ContractViolation("DichotomicObservable: O^2 != I");
        }
    }

    const Operator &op() const { return op_; }
    std::size_t dim() const { return op_.dim(); }

  private:
    Operator op_;
};

/// Positive unit-trace operator on C^d ⊗ C^d.
class BipartiteState {
  public:
    BipartiteState(std::size_t local_dim, Operator rho) : d_(local_dim), rho_(std::move(rho)) {
        if (d_ == 0 || rho_.dim() != d_ * d_) {
            throw ContractViolation("BipartiteState: operator dimension must be local_dim^2");
        }
        if (!rho_.is_hermitian()) {
            throw ConstructionError("BipartiteState: not Hermitian");
        }
        if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > tol::kTrace) {
            throw ConstructionError("BipartiteState: trace != 1");
        }
        if (rho_.min_eigenvalue() < -tol::kEigenFloor) {
            throw ConstructionError("BipartiteState: negative eigenvalue");
        }
    }

    /// Projector onto a (normalised here) joint pure state.
    static BipartiteState pure(std::size_t local_dim, const Vector &psi) {
        Vector v = psi / psi.norm();
        return BipartiteState(local_dim, Operator(v * v.adjoint()));
    }

    std::size_t local_dim() const { return d_; }
    const Operator &op() const { return rho_; }

    double purity() const { return (rho_ * rho_).trace().real(); }

  private:
    std::size_t d_;
    Operator rho_;
};

enum class Side { A, B };

// ---------------------------------------------------------------------------
// Elementary operators.

inline Operator pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator(m);
}

inline Operator pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Operator(m);
}

inline Operator pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator(m);
}

/// n·σ for a real 3-vector.
inline Operator bloch_operator(const Bloch &n) {
    return n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
}

/// Dichotomic qubit observable n̂·σ; n is normalised first.
inline DichotomicObservable bloch_observable(const Bloch &n) {
    double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (r == 0.0) {
        throw DomainError("bloch_observable: zero vector");
    }
    return DichotomicObservable(bloch_operator({n[0] / r, n[1] / r, n[2] / r}));
}

// ---------------------------------------------------------------------------
// Core operations.

inline Operator tensor(const Operator &a, const Operator &b, std::size_t max_dim = kDefaultMaxDim) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da * db > max_dim) {
        throw DimensionLimitError("tensor: dimension " + std::to_string(da * db) + " exceeds limit " +
                                  std::to_string(max_dim));
    }
    const auto n = static_cast<Eigen::Index>(da * db);
    const auto ea = static_cast<Eigen::Index>(da);
    const auto eb = static_cast<Eigen::Index>(db);
    Matrix out(n, n);
    for (Eigen::Index i = 0; i < ea; ++i) {
        for (Eigen::Index j = 0; j < ea; ++j) {
            out.block(i * eb, j * eb, eb, eb) = a.matrix()(i, j) * b.matrix();
        }
    }
    return Operator(std::move(out));
}

/// Partial trace of an operator on C^da ⊗ C^db over the given side.
inline Operator partial_trace(const Operator &op, std::size_t da, std::size_t db, Side traced) {
    if (op.dim() != da * db) {
        throw ContractViolation("partial_trace: dimension mismatch");
    }
    const auto ea = static_cast<Eigen::Index>(da);
    const auto eb = static_cast<Eigen::Index>(db);
    const Matrix &m = op.matrix();
    if (traced == Side::A) {
        Matrix out = Matrix::Zero(eb, eb);
        for (Eigen::Index a = 0; a < ea; ++a) {
            out += m.block(a * eb, a * eb, eb, eb);
        }
        return Operator(std::move(out));
    }
    Matrix out(ea, ea);
    for (Eigen::Index i = 0; i < ea; ++i) {
        for (Eigen::Index j = 0; j < ea; ++j) {
            out(i, j) = m.block(i * eb, j * eb, eb, eb).trace();
        }
    }
    return Operator(std::move(out));
}

/// Reduced operator after tracing out `traced`.
inline Operator partial_trace(const BipartiteState &rho, Side traced) {
    return partial_trace(rho.op(), rho.local_dim(), rho.local_dim(), traced);
}

/// Born rule Tr[ρO] for Hermitian O.
inline double expectation(const BipartiteState &rho, const Operator &o) {
    if (o.dim() != rho.op().dim()) {
        throw ContractViolation("expectation: dimension mismatch");
    }
    if (!o.is_hermitian()) {
        throw ContractViolation("expectation: observable is not Hermitian");
    }
    // Tr[ρO] = Σ_ij ρ_ij O_ji
    Complex t = rho.op().matrix().cwiseProduct(o.matrix().transpose()).sum();
    if (std::abs(t.imag()) > tol::kImagResidue) {
        throw ContractViolation("expectation: imaginary residue " + std::to_string(t.imag()));
    }
    return t.real();
}

inline Operator anticommutator(const Operator &a, const Operator &b) { return a * b + b * a; }

inline Operator commutator(const Operator &a, const Operator &b) { return a * b - b * a; }

/// O ⊗ I_ancilla.
inline Operator embed(const Operator &o, std::size_t ancilla_dim) {
    return tensor(o, Operator::identity(ancilla_dim));
}

inline DichotomicObservable embed(const DichotomicObservable &o, std::size_t ancilla_dim) {
    return DichotomicObservable(embed(o.op(), ancilla_dim));
}

/// Joint state of two independent bipartite pairs, regrouped as (A A') ⊗ (B B').
inline BipartiteState interleave(const BipartiteState &rho, const BipartiteState &sigma) {
    const std::size_t d = rho.local_dim();
    const std::size_t e = sigma.local_dim();
    const std::size_t D = d * e;
    const Matrix &r = rho.op().matrix();
    const Matrix &s = sigma.op().matrix();
    Matrix out(static_cast<Eigen::Index>(D * D), static_cast<Eigen::Index>(D * D));
    // Row index of the regrouped space: ((a·e + a')·d·e + b·e + b').
    auto joint = [&](std::size_t a, std::size_t ap, std::size_t b, std::size_t bp) {
        return static_cast<Eigen::Index>((a * e + ap) * D + b * e + bp);
    };
    auto pair = [](std::size_t x, std::size_t y, std::size_t n) { return static_cast<Eigen::Index>(x * n + y); };
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t ap = 0; ap < e; ++ap)
                for (std::size_t bp = 0; bp < e; ++bp)
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::size_t f = 0; f < d; ++f)
                            for (std::size_t cp = 0; cp < e; ++cp)
                                for (std::size_t fp = 0; fp < e; ++fp)
                                    out(joint(a, ap, b, bp), joint(c, cp, f, fp)) =
                                        r(pair(a, b, d), pair(c, f, d)) * s(pair(ap, bp, e), pair(cp, fp, e));
    return BipartiteState(D, Operator(std::move(out)));
}

/// |Φ_d⟩ = Σ_k |kk⟩/√d.
inline BipartiteState max_entangled_state(std::size_t d) {
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(d * d));
    for (std::size_t k = 0; k < d; ++k) {
        psi(static_cast<Eigen::Index>(k * d + k)) = 1.0;
    }
    return BipartiteState::pure(d, psi);
}

/// Builds ρ = (1/d²)[I⊗I + Σ s_i N_i⊗N_i] from a family of pairwise
/// anticommuting traceless observables, searching the signs s_i ∈ {±1} in
/// binary order (bit i set means s_i = -1) and returning the first positive
/// pure candidate.
inline BipartiteState make_max_entangled(std::span<const DichotomicObservable> family, std::size_t d) {
    if (family.empty() || family.size() > 20) {
        throw ContractViolation("make_max_entangled: family size out of range");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].dim() != d) {
            throw ContractViolation("make_max_entangled: observable dimension != d");
        }
        if (std::abs(family[i].op().trace()) > tol::kAlgebraic) {
            throw ContractViolation("make_max_entangled: observable is not traceless");
        }
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (anticommutator(family[i].op(), family[j].op()).max_abs_entry() > tol::kAlgebraic) {
                throw ContractViolation("make_max_entangled: family is not pairwise anticommuting");
            }
        }
    }

    std::vector<Operator> products;
    products.reserve(family.size());
    for (const auto &n : family) {
        products.push_back(tensor(n.op(), n.op()));
    }
    const Operator id = Operator::identity(d * d);
    const double scale = 1.0 / static_cast<double>(d * d);

    std::string failure = "not positive";
    for (std::size_t mask = 0; mask < (std::size_t{1} << family.size()); ++mask) {
        Operator rho = id;
        for (std::size_t i = 0; i < products.size(); ++i) {
            rho += ((mask >> i) & 1u) ? -products[i] : products[i];
        }
        rho *= Complex(scale, 0.0);
        if (rho.min_eigenvalue() < -tol::kEigenFloor) {
            continue;
        }
        if (std::abs((rho * rho).trace().real() - 1.0) > tol::kAlgebraic) {
            failure = "not pure";
            continue;
        }
        return BipartiteState(d, rho);
    }
    throw ConstructionError("make_max_entangled: no sign pattern gives a valid state (" + failure + ")");
}

}  // namespace seqbell
