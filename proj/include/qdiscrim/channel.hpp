/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdiscrim/complex_matrix.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

//=========================================================================
// Pauli matrices
//=========================================================================

inline const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

inline const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
    return m;
}

inline const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

//=========================================================================
// KrausChannel
//=========================================================================

/// A noise channel rho -> sum_i A_i rho A_i†, held as its Kraus operators.
/// Construction checks shapes only; completeness_residual() reports how
/// far sum A_i†A_i is from the identity so that loaders and diagnostics
/// can reject broken channels with a concrete number.
class KrausChannel {
public:
    KrausChannel(std::string name, std::vector<ComplexMatrix> operators)
        : name_(std::move(name)), operators_(std::move(operators)) {
        if (operators_.empty())
            throw InvalidState("channel needs at least one Kraus operator");
        operators_.front().require_square();
        dim_ = operators_.front().rows();
        for (const auto& op : operators_) {
            op.require_square();
            if (op.rows() != dim_)
                throw DimensionMismatch("Kraus operators differ in dimension");
        }
        // Built eagerly so a shared channel stays read-only under
        // concurrent use.
        two_use_.reserve(operators_.size() * operators_.size());
        for (const auto& a : operators_)
            for (const auto& b : operators_) two_use_.push_back(tensor(a, b));
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return operators_.size(); }
    const std::vector<ComplexMatrix>& operators() const { return operators_; }

    /// Max-abs entry of sum A_i†A_i - I.
    double completeness_residual() const {
        ComplexMatrix sum(dim_, dim_);
        for (const auto& op : operators_) sum += op.adjoint() * op;
        return max_abs_diff(sum, ComplexMatrix::identity(dim_));
    }

    bool is_complete(double tol = kStateTol) const { return completeness_residual() <= tol; }

    /// Single transmission: sum_i A_i rho A_i†.
    DensityMatrix apply(const DensityMatrix& rho) const {
        if (rho.dim() != dim_) throw DimensionMismatch("state dimension does not match channel");
        return DensityMatrix(apply_raw(rho.matrix()));
    }

    /// Two transmissions: sum_{i,j} (A_i ⊗ A_j) R (A_i ⊗ A_j)†.
    DensityMatrix apply_two(const DensityMatrix& R) const {
        if (R.dim() != dim_ * dim_)
            throw DimensionMismatch("state dimension does not match two channel uses");
        return DensityMatrix(apply_two_raw(R.matrix()));
    }

    /// The unvalidated linear action on an arbitrary matrix (used on
    /// traceless differences, where the output is not a state).
    ComplexMatrix apply_raw(const ComplexMatrix& m) const {
        ComplexMatrix out(dim_, dim_);
        for (const auto& op : operators_) out += op * m * op.adjoint();
        return out;
    }

    ComplexMatrix apply_two_raw(const ComplexMatrix& m) const {
        const std::size_t d2 = dim_ * dim_;
        if (m.rows() != d2 || m.cols() != d2)
            throw DimensionMismatch("matrix dimension does not match two channel uses");
        ComplexMatrix out(d2, d2);
        for (const auto& k : two_use_operators()) out += k * m * k.adjoint();
        return out;
    }

    /// The Kraus set {A_i ⊗ A_j} of the two-use channel, (i,j) row-major.
    const std::vector<ComplexMatrix>& two_use_operators() const { return two_use_; }

private:
    std::string name_;
    std::vector<ComplexMatrix> operators_;
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> two_use_;
};

namespace detail {

inline void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << what << " must lie in [0, 1], got " << v;
        throw ParameterOutOfRange(msg.str());
    }
}

}  // namespace detail

//=========================================================================
// Built-in channel families
//=========================================================================

/// Identity with probability x, otherwise one of the two Pauli rotations
/// sigma_1, sigma_2 with probability (1-x)/2 each.
inline KrausChannel two_pauli(double x) {
    detail::require_unit_interval(x, "two-Pauli parameter x");
    const double w = std::sqrt(0.5 * (1.0 - x));
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::identity(2) * Complex(std::sqrt(x), 0.0));
    ops.push_back(pauli_x() * Complex(w, 0.0));
    ops.push_back(pauli_y() * Complex(0.0, -w));
    return KrausChannel("two_pauli", std::move(ops));
}

/// Photon-loss channel: |up> (one photon) decays toward |down> (vacuum),
/// which is the fixed point.
inline KrausChannel amplitude_damping(double x) {
    detail::require_unit_interval(x, "amplitude damping parameter x");
    ComplexMatrix a1{{std::sqrt(x), 0.0}, {0.0, 1.0}};
    ComplexMatrix a2{{0.0, 0.0}, {std::sqrt(1.0 - x), 0.0}};
    return KrausChannel("amplitude_damping", {std::move(a1), std::move(a2)});
}

/// Isotropic Bloch-sphere contraction by 1-p.
inline KrausChannel depolarizing(double p) {
    detail::require_unit_interval(p, "depolarizing parameter p");
    const double w = std::sqrt(p / 4.0);
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::identity(2) * Complex(std::sqrt(1.0 - 3.0 * p / 4.0), 0.0));
    ops.push_back(pauli_x() * Complex(w, 0.0));
    ops.push_back(pauli_y() * Complex(w, 0.0));
    ops.push_back(pauli_z() * Complex(w, 0.0));
    return KrausChannel("depolarizing", std::move(ops));
}

/// Single Pauli rotation sigma_3 with probability 1-x; sigma_3
/// eigenstates pass through noiselessly.
inline KrausChannel dephasing(double x) {
    detail::require_unit_interval(x, "dephasing parameter x");
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::identity(2) * Complex(std::sqrt(x), 0.0));
    ops.push_back(pauli_z() * Complex(std::sqrt(1.0 - x), 0.0));
    return KrausChannel("dephasing", std::move(ops));
}

//=========================================================================
// Bloch-sphere view of qubit states
//=========================================================================

/// Real three-vector with ||a|| <= 1; rho = (I + a.sigma)/2.
struct BlochVector {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    double squared_length() const { return a1 * a1 + a2 * a2 + a3 * a3; }
};

inline void require_valid(const BlochVector& a) {
    if (a.squared_length() > 1.0 + 1e-12)
        throw ParameterOutOfRange("Bloch vector longer than 1");
}

/// rho_+- = (I ± a.sigma)/2.
inline DensityMatrix bloch_state(const BlochVector& a, int sign = +1) {
    require_valid(a);
    const double s = sign >= 0 ? 1.0 : -1.0;
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += pauli_x() * Complex(s * a.a1, 0.0);
    m += pauli_y() * Complex(s * a.a2, 0.0);
    m += pauli_z() * Complex(s * a.a3, 0.0);
    return DensityMatrix(m * Complex(0.5, 0.0));
}

/// Closed-form single-use action of the two-Pauli channel on the Bloch
/// sphere: b = (a1 x, a2 x, a3 (2x - 1)).
inline BlochVector bloch_action_two_pauli(const BlochVector& a, double x) {
    require_valid(a);
    detail::require_unit_interval(x, "two-Pauli parameter x");
    return BlochVector{a.a1 * x, a.a2 * x, a.a3 * (2.0 * x - 1.0)};
}

//=========================================================================
// JSON channel format
//=========================================================================
//
// {"name": str, "dim": int,
//  "operators": [ [ [ [re, im], ... ] per row ] per operator ]}

inline nlohmann::json channel_to_json(const KrausChannel& ch) {
    nlohmann::json j;
    j["name"] = ch.name();
    j["dim"] = ch.dim();
    auto& ops = j["operators"] = nlohmann::json::array();
    for (const auto& op : ch.operators()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < op.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < op.cols(); ++k)
                row.push_back({op(i, k).real(), op(i, k).imag()});
            rows.push_back(std::move(row));
        }
        ops.push_back(std::move(rows));
    }
    return j;
}

/// Parses the JSON channel format and rejects channels whose completeness
/// residual exceeds 1e-9, quoting the residual.
inline KrausChannel channel_from_json(const nlohmann::json& j) {
    if (!j.contains("name") || !j.contains("dim") || !j.contains("operators"))
        throw ChannelFormatError("channel JSON needs \"name\", \"dim\" and \"operators\"");
    const std::string name = j.at("name").get<std::string>();
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw ChannelFormatError("channel dimension must be positive");

    std::vector<ComplexMatrix> ops;
    for (const auto& jop : j.at("operators")) {
        if (jop.size() != dim) throw ChannelFormatError("operator row count does not match dim");
        ComplexMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto& row = jop.at(i);
            if (row.size() != dim)
                throw ChannelFormatError("operator column count does not match dim");
            for (std::size_t k = 0; k < dim; ++k) {
                const auto& entry = row.at(k);
                if (entry.size() != 2)
                    throw ChannelFormatError("matrix entries must be [re, im] pairs");
                m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        }
        ops.push_back(std::move(m));
    }

    KrausChannel ch(name, std::move(ops));
    const double residual = ch.completeness_residual();
    if (residual > kStateTol) {
        std::ostringstream msg;
        msg << "channel \"" << name << "\" fails the completeness relation: residual "
            << residual << " exceeds 1e-9";
        throw ChannelFormatError(msg.str());
    }
    return ch;
}

inline KrausChannel load_channel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ChannelFormatError("cannot open channel file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ChannelFormatError("cannot parse channel file " + path + ": " + e.what());
    }
    return channel_from_json(j);
}

}  // namespace qdiscrim
