/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdiscrim/complex_matrix.hpp"
#include "qdiscrim/rng.hpp"

namespace qdiscrim {

/// State validity tolerance used everywhere: trace, hermiticity and the
/// PSD check (min eigenvalue >= -kStateTol).
inline constexpr double kStateTol = 1e-9;

//=========================================================================
// DensityMatrix
//=========================================================================

/// Hermitian, unit-trace, positive semidefinite matrix. Construction
/// validates; instances are immutable afterwards.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
        m_.require_square();
        if (m_.hermiticity_residual() > kStateTol)
            throw InvalidState("state is not Hermitian within 1e-9");
        // Symmetrize so downstream spectral calls see an exact Hermitian.
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = i; j < m_.cols(); ++j) {
                const Complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
                m_(i, j) = avg;
                m_(j, i) = std::conj(avg);
            }
        if (std::abs(m_.trace().real() - 1.0) > kStateTol)
            throw InvalidState("state trace differs from 1 beyond 1e-9");
        const Spectrum s = hermitian_eig(m_);
        if (s.eigenvalues.back() < -kStateTol)
            throw InvalidState("state has an eigenvalue below -1e-9");
    }

    /// Projector onto a pure state; the vector must be unit within 1e-10.
    static DensityMatrix pure(const Vec& v) {
        if (std::abs(vec_norm(v) - 1.0) > 1e-10)
            throw InvalidState("pure state vector is not unit norm within 1e-10");
        return DensityMatrix(outer(normalized(v)));
    }

    static DensityMatrix maximally_mixed(std::size_t dim) {
        return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / dim, 0.0));
    }

    const ComplexMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
};

//=========================================================================
// Povm
//=========================================================================

/// Positive operators summing to the identity.
class Povm {
public:
    explicit Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
        if (elements_.empty()) throw InvalidState("POVM needs at least one element");
        const std::size_t d = elements_.front().rows();
        ComplexMatrix sum(d, d);
        for (const auto& e : elements_) {
            e.require_square();
            if (e.rows() != d) throw DimensionMismatch("POVM elements differ in dimension");
            if (e.hermiticity_residual() > kStateTol)
                throw InvalidState("POVM element is not Hermitian");
            const Spectrum s = hermitian_eig(e);
            if (s.eigenvalues.back() < -kStateTol)
                throw InvalidState("POVM element is not positive semidefinite");
            sum += e;
        }
        if (max_abs_diff(sum, ComplexMatrix::identity(d)) > kStateTol)
            throw InvalidState("POVM elements do not sum to the identity within 1e-9");
    }

    std::size_t size() const { return elements_.size(); }
    std::size_t dim() const { return elements_.front().rows(); }
    const ComplexMatrix& element(std::size_t b) const { return elements_[b]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

private:
    std::vector<ComplexMatrix> elements_;
};

//=========================================================================
// SignalPair
//=========================================================================

/// The two input states encoding bit 0 / bit 1, with prior probabilities.
class SignalPair {
public:
    static SignalPair pure(Vec v0, Vec v1, double prior0 = 0.5, double prior1 = 0.5) {
        SignalPair p(DensityMatrix::pure(v0), DensityMatrix::pure(v1), prior0, prior1);
        p.vec0_ = std::move(v0);
        p.vec1_ = std::move(v1);
        return p;
    }

    static SignalPair mixed(DensityMatrix r0, DensityMatrix r1, double prior0 = 0.5,
                            double prior1 = 0.5) {
        return SignalPair(std::move(r0), std::move(r1), prior0, prior1);
    }

    const DensityMatrix& state0() const { return rho0_; }
    const DensityMatrix& state1() const { return rho1_; }
    double prior0() const { return prior0_; }
    double prior1() const { return prior1_; }
    std::size_t dim() const { return rho0_.dim(); }

    bool is_pure() const { return vec0_.has_value(); }
    const Vec& vector0() const { return require_pure(vec0_); }
    const Vec& vector1() const { return require_pure(vec1_); }

private:
    SignalPair(DensityMatrix r0, DensityMatrix r1, double p0, double p1)
        : rho0_(std::move(r0)), rho1_(std::move(r1)), prior0_(p0), prior1_(p1) {
        if (rho0_.dim() != rho1_.dim())
            throw DimensionMismatch("signal states differ in dimension");
        if (prior0_ < 0.0 || prior1_ < 0.0 || std::abs(prior0_ + prior1_ - 1.0) > 1e-12)
            throw InvalidState("priors must be nonnegative and sum to 1 within 1e-12");
    }

    static const Vec& require_pure(const std::optional<Vec>& v) {
        if (!v) throw InvalidState("signal pair does not carry pure-state vectors");
        return *v;
    }

    DensityMatrix rho0_;
    DensityMatrix rho1_;
    double prior0_;
    double prior1_;
    std::optional<Vec> vec0_;
    std::optional<Vec> vec1_;
};

//=========================================================================
// Seeded random states
//=========================================================================

/// Unit vector of independent standard complex Gaussians, normalized.
inline Vec random_pure(std::size_t dim, CounterRng& rng) {
    Vec v(dim);
    for (auto& c : v) c = Complex(rng.gaussian(), rng.gaussian());
    return normalized(v);
}

/// Wishart-style random mixed state: G G† / tr(G G†).
inline DensityMatrix random_density(std::size_t dim, CounterRng& rng) {
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    return DensityMatrix(w * Complex(1.0 / tr, 0.0));
}

/// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, CounterRng& rng) {
    std::vector<Vec> cols;
    cols.reserve(dim);
    while (cols.size() < dim) {
        Vec v(dim);
        for (auto& c : v) c = Complex(rng.gaussian(), rng.gaussian());
        for (const auto& u : cols) {
            const Complex proj = inner(u, v);
            for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u[i];
        }
        if (vec_norm(v) < 1e-8) continue;  // resample a degenerate draw
        cols.push_back(normalized(v));
    }
    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
    return u;
}

}  // namespace qdiscrim
