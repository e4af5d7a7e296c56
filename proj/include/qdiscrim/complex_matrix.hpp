/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "qdiscrim/errors.hpp"

namespace qdiscrim {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

/// Tolerance below which a nearly-Hermitian matrix is silently symmetrized;
/// larger deviations are hard errors.
inline constexpr double kHermitianTol = 1e-9;

//=========================================================================
// ComplexMatrix: dense row-major complex matrix
//=========================================================================

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    /// Builds from nested initializer lists, one inner list per row.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("ragged initializer for ComplexMatrix");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    Complex trace() const {
        require_square();
        Complex t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest entry of |A - A†|; zero for exactly Hermitian matrices.
    double hermiticity_residual() const {
        require_square();
        double m = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    void require_square() const {
        if (!is_square()) throw DimensionMismatch("operation requires a square matrix");
    }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

//=========================================================================
// Vector helpers for pure states
//=========================================================================

inline Complex inner(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner product length mismatch");
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

inline double vec_norm(const Vec& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

inline Vec normalized(Vec v) {
    const double n = vec_norm(v);
    if (n == 0.0) throw InvalidState("cannot normalize the zero vector");
    for (auto& c : v) c /= n;
    return v;
}

/// Rank-one projector |v><v|.
inline ComplexMatrix outer(const Vec& v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

inline Vec apply_matrix(const ComplexMatrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec out(m.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

//=========================================================================
// Kronecker product
//=========================================================================

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

//=========================================================================
// Hermitian eigendecomposition (cyclic Jacobi)
//=========================================================================

/// Full spectrum of a Hermitian matrix. Eigenvalues are sorted
/// nonincreasing; eigenvectors() column i pairs with eigenvalue i.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

inline double max_offdiag(const ComplexMatrix& h) {
    double m = 0.0;
    for (std::size_t p = 0; p + 1 < h.rows(); ++p)
        for (std::size_t q = p + 1; q < h.rows(); ++q) m = std::max(m, std::abs(h(p, q)));
    return m;
}

}  // namespace detail

/// Cyclic Jacobi diagonalization. The input must be Hermitian within
/// kHermitianTol (it is symmetrized to (A + A†)/2 before iterating).
/// Throws NotHermitian when the residual exceeds the tolerance and
/// NoConvergence if the sweep budget is exhausted.
inline Spectrum hermitian_eig(const ComplexMatrix& a) {
    a.require_square();
    if (a.hermiticity_residual() > kHermitianTol)
        throw NotHermitian("matrix is not Hermitian within 1e-9");

    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = n < 2;
    for (int sweep = 0; sweep < detail::kJacobiMaxSweeps && !converged; ++sweep) {
        if (detail::max_offdiag(h) <= detail::kJacobiOffTol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = h(p, q);
                const double m = std::abs(b);
                if (m < 1e-300) continue;
                // Factor the phase out of h(p,q), then a real Jacobi rotation.
                const Complex phase = b / m;  // e^{i phi}
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * m);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Combined unitary W: W(p,p)=c, W(p,q)=s, W(q,p)=-s*conj(phase),
                // W(q,q)=c*conj(phase). Update h <- W† h W and v <- v W.
                const Complex wqp = -s * std::conj(phase);
                const Complex wqq = c * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex hip = h(i, p), hiq = h(i, q);
                    h(i, p) = c * hip + wqp * hiq;
                    h(i, q) = s * hip + wqq * hiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = c * hpj + std::conj(wqp) * hqj;
                    h(q, j) = s * hpj + std::conj(wqq) * hqj;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = Complex(h(p, p).real(), 0.0);
                h(q, q) = Complex(h(q, q).real(), 0.0);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + wqp * viq;
                    v(i, q) = s * vip + wqq * viq;
                }
            }
        }
    }
    if (!converged && detail::max_offdiag(h) > detail::kJacobiOffTol)
        throw NoConvergence("Jacobi eigensolver exceeded 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return h(i, i).real() > h(j, j).real();
    });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        spec.eigenvalues[k] = h(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, k) = v(i, order[k]);
    }
    return spec;
}

/// Column k of a Spectrum's eigenvector matrix as a vector.
inline Vec spectrum_column(const Spectrum& s, std::size_t k) {
    Vec v(s.eigenvectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.eigenvectors(i, k);
    return v;
}

//=========================================================================
// Trace norm and commutators
//=========================================================================

/// Sum of the absolute values of the eigenvalues of a Hermitian matrix.
inline double trace_norm(const ComplexMatrix& a) {
    const Spectrum s = hermitian_eig(a);
    double t = 0.0;
    for (double lam : s.eigenvalues) t += std::abs(lam);
    return t;
}

/// Frobenius norm of ab - ba.
inline double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_square();
    b.require_square();
    if (a.rows() != b.rows())
        throw DimensionMismatch("commutator requires equal square dimensions");
    return (a * b - b * a).frobenius_norm();
}

}  // namespace qdiscrim
