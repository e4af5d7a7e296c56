/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "qdiscrim/channel.hpp"
#include "qdiscrim/complex_matrix.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

//=========================================================================
// Bell operator basis
//=========================================================================
//
// Ordering is (Phi+, Phi-, Psi+, Psi-) throughout:
//   |Phi+-> = (|uu> +- |dd>)/sqrt(2),  |Psi+-> = (|ud> +- |du>)/sqrt(2),
// over the computational ordering (uu, ud, du, dd).

/// Amplitudes over (Phi+, Phi-, Psi+, Psi-).
struct BellCoefficients {
    Complex a, b, c, d;

    double squared_norm() const {
        return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    }

    bool is_real(double tol = 1e-12) const {
        return std::abs(a.imag()) <= tol && std::abs(b.imag()) <= tol &&
               std::abs(c.imag()) <= tol && std::abs(d.imag()) <= tol;
    }
};

/// Unitary whose columns are the Bell vectors in computational components.
inline const ComplexMatrix& bell_basis() {
    static const ComplexMatrix b = [] {
        const double s = 1.0 / std::sqrt(2.0);
        return ComplexMatrix{{s, s, 0.0, 0.0},
                             {0.0, 0.0, s, s},
                             {0.0, 0.0, s, -s},
                             {s, -s, 0.0, 0.0}};
    }();
    return b;
}

inline Vec bell_to_computational(const BellCoefficients& c) {
    if (std::abs(c.squared_norm() - 1.0) > 1e-10)
        throw InvalidState("Bell coefficients are not normalized within 1e-10");
    return apply_matrix(bell_basis(), Vec{c.a, c.b, c.c, c.d});
}

inline BellCoefficients computational_to_bell(const Vec& v) {
    if (v.size() != 4) throw DimensionMismatch("expected a two-qubit state vector");
    const Vec c = apply_matrix(bell_basis().adjoint(), v);
    return BellCoefficients{c[0], c[1], c[2], c[3]};
}

/// Conjugates a computational-basis operator into the Bell ordering.
inline ComplexMatrix to_bell_basis(const ComplexMatrix& m) {
    return bell_basis().adjoint() * m * bell_basis();
}

inline ComplexMatrix from_bell_basis(const ComplexMatrix& m) {
    return bell_basis() * m * bell_basis().adjoint();
}

//=========================================================================
// POVM error and the Helstrom bound
//=========================================================================

/// Average error probability of guessing the bit from the measurement
/// {E_b}: sum_b min{ pi_0 tr(R0 E_b), pi_1 tr(R1 E_b) }.
inline double povm_error(const Povm& povm, const DensityMatrix& r0, const DensityMatrix& r1,
                         double prior0 = 0.5, double prior1 = 0.5) {
    if (povm.dim() != r0.dim() || r0.dim() != r1.dim())
        throw DimensionMismatch("POVM and state dimensions differ");
    double pe = 0.0;
    for (std::size_t b = 0; b < povm.size(); ++b) {
        const double p0 = prior0 * (povm.element(b) * r0.matrix()).trace().real();
        const double p1 = prior1 * (povm.element(b) * r1.matrix()).trace().real();
        pe += std::min(p0, p1);
    }
    return pe;
}

/// Minimum-error discrimination result: the error probability, the
/// spectrum of the weighted difference pi_1 R1 - pi_0 R0, and the induced
/// two-outcome measurement (element 0 guesses bit 0).
struct DiscriminationResult {
    double pe;
    Spectrum gamma_spectrum;
    Povm measurement;
};

/// Optimal two-outcome measurement and its error probability. For equal
/// priors this is pe = 1/2 - tr|R1 - R0|/4; in general the projectors
/// onto the nonnegative/negative eigenspaces of pi_1 R1 - pi_0 R0 achieve
/// pe = (1 - tr|pi_1 R1 - pi_0 R0|)/2.
inline DiscriminationResult helstrom_error(const DensityMatrix& r0, const DensityMatrix& r1,
                                           double prior0 = 0.5, double prior1 = 0.5) {
    if (r0.dim() != r1.dim()) throw DimensionMismatch("state dimensions differ");
    const std::size_t d = r0.dim();

    ComplexMatrix gamma = r1.matrix() * Complex(prior1, 0.0) - r0.matrix() * Complex(prior0, 0.0);
    Spectrum spec = hermitian_eig(gamma);

    double tn = 0.0;
    ComplexMatrix proj_pos(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        tn += std::abs(spec.eigenvalues[k]);
        if (spec.eigenvalues[k] >= 0.0) proj_pos += outer(spectrum_column(spec, k));
    }
    ComplexMatrix proj_neg = ComplexMatrix::identity(d) - proj_pos;

    DiscriminationResult result{0.5 * (1.0 - tn), std::move(spec),
                                Povm({std::move(proj_neg), std::move(proj_pos)})};
    result.pe = std::max(result.pe, 0.0);
    return result;
}

//=========================================================================
// Two-Pauli channel through two uses: closed forms
//=========================================================================

namespace detail {

/// The five polynomial coefficients of the two-use output matrix.
struct BellMatrixCoeffs {
    double e, f, g, h, k;
};

inline BellMatrixCoeffs bell_matrix_coeffs(double x) {
    return BellMatrixCoeffs{0.5 * (1.0 - 2.0 * x + 3.0 * x * x),
                            0.5 * (1.0 - x) * (1.0 - x),
                            x * (1.0 - x),
                            2.0 * x - 1.0,
                            x * (2.0 * x - 1.0)};
}

}  // namespace detail

/// The two-use output density matrix for a pure input with real Bell
/// amplitudes, written directly in the Bell ordering. Complex amplitudes
/// take the brute-force route through apply_two plus a basis change,
/// since the closed-form entries hold only for real amplitudes.
inline DensityMatrix two_pauli_output_bell(const BellCoefficients& coeffs, double x) {
    detail::require_unit_interval(x, "two-Pauli parameter x");
    if (std::abs(coeffs.squared_norm() - 1.0) > 1e-10)
        throw InvalidState("Bell coefficients are not normalized within 1e-10");

    if (!coeffs.is_real()) {
        const DensityMatrix out =
            two_pauli(x).apply_two(DensityMatrix::pure(bell_to_computational(coeffs)));
        return DensityMatrix(to_bell_basis(out.matrix()));
    }

    const double a = coeffs.a.real(), b = coeffs.b.real();
    const double c = coeffs.c.real(), d = coeffs.d.real();
    const auto [e, f, g, h, k] = detail::bell_matrix_coeffs(x);

    ComplexMatrix m(4, 4);
    m(0, 0) = e * a * a + f * b * b + g * c * c + g * d * d;
    m(1, 1) = f * a * a + e * b * b + g * c * c + g * d * d;
    m(2, 2) = g * a * a + g * b * b + e * c * c + f * d * d;
    m(3, 3) = g * a * a + g * b * b + f * c * c + e * d * d;
    m(0, 1) = m(1, 0) = h * a * b;
    m(0, 2) = m(2, 0) = x * a * c;
    m(0, 3) = m(3, 0) = k * a * d;
    m(1, 2) = m(2, 1) = k * b * c;
    m(1, 3) = m(3, 1) = x * b * d;
    m(2, 3) = m(3, 2) = h * c * d;
    return DensityMatrix(std::move(m));
}

/// Best error probability using orthogonal product inputs (equivalently,
/// a single transmission): x for x <= 1/3, (1 - x)/2 for x >= 1/3.
inline double product_baseline_pe(double x) {
    detail::require_unit_interval(x, "two-Pauli parameter x");
    return x <= 1.0 / 3.0 ? x : 0.5 - 0.5 * x;
}

/// The orthogonal signal ansatz in the (Phi+, Psi+) plane:
///   |0> = cos a |Phi+> + sin a |Psi+>,  |1> = -sin a |Phi+> + cos a |Psi+>.
inline SignalPair ansatz_states(double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    return SignalPair::pure(bell_to_computational(BellCoefficients{c, 0.0, s, 0.0}),
                            bell_to_computational(BellCoefficients{-s, 0.0, c, 0.0}));
}

namespace detail {

/// F and G of the compact error formula P_e(Z) = 1/2 - (sqrt(F Z^2 + x^2) + |G Z|)/2.
inline std::pair<double, double> ansatz_fg(double x) {
    const double f = 0.25 * (1.0 - x) * (1.0 - 5.0 * x) * (1.0 - 2.0 * x + 5.0 * x * x);
    const double g = 0.5 * (1.0 - x) * (1.0 - 3.0 * x);
    return {f, g};
}

inline double ansatz_pe_long_form(double alpha, double x) {
    const double cz = std::cos(2.0 * alpha);
    const double sz = std::sin(2.0 * alpha);
    const double q = 0.25 * std::pow(1.0 - 4.0 * x + 5.0 * x * x, 2) * cz * cz + x * x * sz * sz;
    return 0.5 - 0.5 * (std::sqrt(q) + 0.5 * (1.0 - x) * std::abs((1.0 - 3.0 * x) * cz));
}

inline double ansatz_pe_compact_form(double alpha, double x) {
    const auto [f, g] = ansatz_fg(x);
    const double z = std::cos(2.0 * alpha);
    return 0.5 - 0.5 * (std::sqrt(f * z * z + x * x) + std::abs(g * z));
}

/// Optimal Z^2 of the compact form; exceeds 1 below the validity threshold.
inline double ansatz_optimal_z2(double x) {
    const double num = (1.0 - 3.0 * x) * (1.0 - 3.0 * x);
    const double den = 4.0 * x * (5.0 * x - 1.0) * (1.0 - 2.0 * x + 5.0 * x * x);
    return num / den;
}

}  // namespace detail

/// Error probability of the ansatz pair through two channel uses. Both
/// algebraic forms are evaluated and must agree; the result also equals
/// the Helstrom error of the corresponding two-use outputs.
inline double ansatz_pe(double alpha, double x) {
    detail::require_unit_interval(x, "two-Pauli parameter x");
    const double long_form = detail::ansatz_pe_long_form(alpha, x);
    const double compact = detail::ansatz_pe_compact_form(alpha, x);
    if (std::abs(long_form - compact) > 1e-12)
        throw Error("ansatz error-probability forms disagree beyond 1e-12");
    return compact;
}

/// Smallest x for which the interior extremum of the ansatz stays inside
/// Z^2 <= 1; the closed-form root of the validity boundary.
inline double ansatz_threshold() {
    const double t = std::cbrt(15.0 * std::sqrt(330.0) - 73.0);
    return 4.0 / 15.0 - (41.0 / 30.0) / t + t / 30.0;
}

/// Validity-boundary residual: optimal Z^2(x) - 1, which is
/// G^2 x^2 / (F (F - G^2)) - 1 and has its root at ansatz_threshold().
inline double ansatz_boundary_residual(double x) {
    return detail::ansatz_optimal_z2(x) - 1.0;
}

struct OptimalEntangled {
    double pe;
    double z_squared;
    double alpha;
};

/// Closed-form optimum of the ansatz:
///   Z^2 = (1-3x)^2 / (4x (5x-1)(1-2x+5x^2)),
///   pe  = 1/2 - 2 sqrt(x^5 / ((5x-1)(1-2x+5x^2))).
/// Valid for x at or above ansatz_threshold().
inline OptimalEntangled optimal_entangled(double x) {
    detail::require_unit_interval(x, "two-Pauli parameter x");
    if (x < ansatz_threshold() - 1e-12)
        throw ParameterOutOfRange("optimal_entangled requires x >= 0.227539 (ansatz validity)");
    const double z2 = std::min(detail::ansatz_optimal_z2(x), 1.0);
    const double pe =
        0.5 - 2.0 * std::sqrt(std::pow(x, 5) /
                              ((5.0 * x - 1.0) * (1.0 - 2.0 * x + 5.0 * x * x)));
    const double alpha = 0.5 * std::acos(std::sqrt(z2));
    return OptimalEntangled{pe, z2, alpha};
}

/// Published reference values at the representative points, plus the
/// misprint flag for the x = .80 product entry.
struct TableRow {
    double x;
    double published_product;
    double published_entangled;
    bool product_misprint;
};

inline const std::vector<TableRow>& published_table() {
    static const std::vector<TableRow> rows = {
        {0.50, 0.250000, 0.241801, false}, {0.60, 0.200000, 0.188231, false},
        {0.70, 0.150000, 0.137817, false}, {0.80, 0.010000, 0.090072, true},
        {0.90, 0.050000, 0.044319, false}, {0.95, 0.025000, 0.022009, false},
    };
    return rows;
}

//=========================================================================
// Commutation structure of two-use outputs
//=========================================================================

/// Frobenius norm of the commutator of the two two-Pauli two-use outputs.
inline double commutation_probe(const SignalPair& pair, double x) {
    const KrausChannel ch = two_pauli(x);
    const DensityMatrix out0 = ch.apply_two(pair.state0());
    const DensityMatrix out1 = ch.apply_two(pair.state1());
    return commutator_norm(out0.matrix(), out1.matrix());
}

/// The specific orthogonal-but-noncommuting pair of inputs, as Bell
/// amplitudes. Their two-use outputs fail to commute at generic x.
inline SignalPair noncommuting_example_pair() {
    const Vec v0 = normalized(apply_matrix(
        bell_basis(), Vec{-0.459506, -0.870791, 0.127295, 0.119889}));
    const Vec v1 = normalized(apply_matrix(
        bell_basis(), Vec{-0.578111, 0.163069, -0.770549, -0.213192}));
    return SignalPair::pure(v0, v1);
}

/// Rotations of two Bell states: |0> = cos a |B1> + sin a |B2> and the
/// orthogonal complement. Outputs commute for every x.
inline SignalPair bell_plane_pair(std::size_t bell1, std::size_t bell2, double alpha) {
    if (bell1 > 3 || bell2 > 3 || bell1 == bell2)
        throw ParameterOutOfRange("bell_plane_pair needs two distinct Bell indices");
    Vec c0(4, Complex(0.0, 0.0)), c1(4, Complex(0.0, 0.0));
    c0[bell1] = std::cos(alpha);
    c0[bell2] = std::sin(alpha);
    c1[bell1] = -std::sin(alpha);
    c1[bell2] = std::cos(alpha);
    return SignalPair::pure(apply_matrix(bell_basis(), c0), apply_matrix(bell_basis(), c1));
}

/// Non-Bell vectors in the (Phi+, Psi+) plane versus the (Phi-, Psi-)
/// plane. Outputs commute only at x in {0, 1/3, 1}.
inline SignalPair cross_plane_pair(double alpha, double beta) {
    const Vec v0 = bell_to_computational(
        BellCoefficients{std::cos(alpha), 0.0, std::sin(alpha), 0.0});
    const Vec v1 = bell_to_computational(
        BellCoefficients{0.0, std::cos(beta), 0.0, std::sin(beta)});
    return SignalPair::pure(v0, v1);
}

}  // namespace qdiscrim
