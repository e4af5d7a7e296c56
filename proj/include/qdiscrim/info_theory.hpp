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

#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/optimizer.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

//=========================================================================
// Ensembles and mutual information
//=========================================================================

/// Input states with their prior probabilities.
struct Ensemble {
    std::vector<DensityMatrix> states;
    std::vector<double> priors;

    Ensemble(std::vector<DensityMatrix> s, std::vector<double> p)
        : states(std::move(s)), priors(std::move(p)) {
        if (states.empty() || states.size() != priors.size())
            throw InvalidState("ensemble needs one prior per state");
        double sum = 0.0;
        for (double pi : priors) {
            if (pi < 0.0) throw InvalidState("ensemble priors must be nonnegative");
            sum += pi;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw InvalidState("ensemble priors must sum to 1 within 1e-12");
        for (const auto& st : states)
            if (st.dim() != states.front().dim())
                throw DimensionMismatch("ensemble states differ in dimension");
    }

    std::size_t size() const { return states.size(); }
    std::size_t dim() const { return states.front().dim(); }
};

namespace detail {

/// p log2 p with the 0 log 0 = 0 convention; probabilities below 1e-15
/// are clamped to zero before the log.
inline double plog2p(double p) {
    if (p < 1e-15) return 0.0;
    return p * std::log2(p);
}

}  // namespace detail

/// Shannon mutual information (bits) between the ensemble label and the
/// measurement outcome:
///   I = -sum_b tr(rho E_b) log2 tr(rho E_b)
///       + sum_i pi_i sum_b tr(rho_i E_b) log2 tr(rho_i E_b),
/// with rho the prior-weighted average state.
inline double mutual_information(const Ensemble& ensemble, const Povm& povm) {
    if (povm.dim() != ensemble.dim())
        throw DimensionMismatch("POVM dimension does not match ensemble");
    const std::size_t nb = povm.size();

    std::vector<double> marginal(nb, 0.0);
    double info = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        for (std::size_t b = 0; b < nb; ++b) {
            double p = (povm.element(b) * ensemble.states[i].matrix()).trace().real();
            p = std::clamp(p, 0.0, 1.0);
            marginal[b] += ensemble.priors[i] * p;
            info += ensemble.priors[i] * detail::plog2p(p);
        }
    }
    for (std::size_t b = 0; b < nb; ++b) info -= detail::plog2p(marginal[b]);
    return std::max(info, 0.0);
}

inline double binary_entropy(double p) {
    return -detail::plog2p(p) - detail::plog2p(1.0 - p);
}

//=========================================================================
// Restricted capacity optimization
//=========================================================================

struct CapacityResult {
    double bits = 0.0;
    std::vector<double> priors;
    Povm povm;
    bool lower_bound = true;  // search is over projective measurements only

    CapacityResult()
        : povm(Povm({ComplexMatrix::identity(2) * Complex(0.5, 0.0),
                     ComplexMatrix::identity(2) * Complex(0.5, 0.0)})) {}
};

namespace detail {

/// Rank-one projective POVM from a measurement-basis unitary.
inline Povm basis_povm(const ComplexMatrix& u) {
    std::vector<ComplexMatrix> elements;
    for (std::size_t b = 0; b < u.cols(); ++b) {
        Vec col(u.rows());
        for (std::size_t i = 0; i < u.rows(); ++i) col[i] = u(i, b);
        elements.push_back(outer(col));
    }
    return Povm(std::move(elements));
}

/// Best projective rank-one measurement for a fixed prior assignment:
/// seeded random-basis restarts refined by Nelder-Mead over the basis
/// unitary, plus two deterministic candidates (the eigenbasis of the
/// weighted difference for n = 2, and a joint-ish eigenbasis for n > 2).
inline std::pair<double, Povm> best_projective_information(const Ensemble& ensemble,
                                                           int restarts, CounterRng root) {
    const std::size_t d = ensemble.dim();

    double best = -1.0;
    Povm best_povm = basis_povm(ComplexMatrix::identity(d));

    auto consider_basis = [&](const ComplexMatrix& u) {
        Povm p = basis_povm(u);
        const double info = mutual_information(ensemble, p);
        if (info > best) {
            best = info;
            best_povm = std::move(p);
        }
    };

    // Deterministic candidate: eigenbasis of a weighted combination. For
    // two states with priors (p0, p1) this is the Helstrom basis of
    // p1 rho1 - p0 rho0; commuting ensembles get their common eigenbasis.
    {
        ComplexMatrix weighted(d, d);
        if (ensemble.size() == 2) {
            weighted = ensemble.states[1].matrix() * Complex(ensemble.priors[1], 0.0) -
                       ensemble.states[0].matrix() * Complex(ensemble.priors[0], 0.0);
        } else {
            for (std::size_t i = 0; i < ensemble.size(); ++i)
                weighted += ensemble.states[i].matrix() * Complex(static_cast<double>(i + 1), 0.0);
        }
        consider_basis(hermitian_eig(weighted).eigenvectors);
    }

    // Only 4x4 bases have an angle parameterization here; d == 2 bases are
    // handled by embedding the two angles in the first Givens rotation.
    auto angles_to_basis = [d](std::span<const double> a) {
        if (d == 4) return unitary_from_angles(a);
        ComplexMatrix u = ComplexMatrix::identity(2);
        const Complex e = std::polar(1.0, a[1]);
        u(0, 0) = std::cos(a[0]);
        u(1, 1) = std::cos(a[0]);
        u(0, 1) = -std::sin(a[0]) * e;
        u(1, 0) = std::sin(a[0]) * std::conj(e);
        return u;
    };
    const std::size_t nparams = d == 4 ? kPairParamCount : 2;

    auto objective = [&](std::span<const double> a) {
        return -mutual_information(ensemble, basis_povm(angles_to_basis(a)));
    };

    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.stream(r);
        std::vector<double> x0(nparams);
        for (auto& a : x0) a = rng.uniform() * 2.0 * 3.14159265358979323846;
        const NelderMeadResult nm = nelder_mead(objective, std::move(x0), 0.4, 600);
        consider_basis(angles_to_basis(nm.x));
    }

    return {best, std::move(best_povm)};
}

/// All prior vectors of a resolution-g simplex grid over n entries.
inline std::vector<std::vector<double>> simplex_grid(std::size_t n, int g) {
    std::vector<std::vector<double>> out;
    std::vector<int> counts(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i + 1 == n) {
            counts[i] = remaining;
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<double>(counts[k]) / g;
            out.push_back(std::move(p));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[i] = c;
            rec(i + 1, remaining - c);
        }
    };
    rec(0, g);
    return out;
}

}  // namespace detail

/// Channel capacity for a fixed output set: the mutual information
/// maximized over priors (golden-section for n = 2, a simplex grid
/// otherwise) and over projective rank-one measurements (seeded
/// restarts). The result is a lower bound on the unrestricted supremum.
inline CapacityResult capacity_fixed_outputs(const std::vector<DensityMatrix>& states,
                                             int povm_restarts = 8, int prior_grid = 10,
                                             std::uint64_t seed = 42) {
    if (states.size() < 2) throw InvalidState("capacity needs at least two states");
    const CounterRng root(seed);

    CapacityResult result;
    auto evaluate_priors = [&](const std::vector<double>& priors) {
        const Ensemble ens(states, priors);
        auto [bits, povm] = detail::best_projective_information(ens, povm_restarts, root);
        if (bits > result.bits) {
            result.bits = bits;
            result.priors = priors;
            result.povm = std::move(povm);
        }
        return bits;
    };

    if (states.size() == 2) {
        // The surface is concave in the prior for a fixed POVM; golden
        // section over pi_0 with the inner POVM maximization per point.
        evaluate_priors({0.5, 0.5});
        golden_section_min(
            [&](double p0) { return -evaluate_priors({p0, 1.0 - p0}); }, 0.0, 1.0, 1e-10);
    } else {
        for (const auto& priors : detail::simplex_grid(states.size(), prior_grid))
            evaluate_priors(priors);
        // Equal priors are always a candidate, whatever the grid parity.
        std::vector<double> equal(states.size(), 1.0 / static_cast<double>(states.size()));
        evaluate_priors(equal);
    }
    return result;
}

//=========================================================================
// One use versus two uses: heuristic lower bounds
//=========================================================================

/// Budgeted lower bounds on the fixed-input capacity for one and for two
/// transmissions. Both numbers are heuristic lower bounds and are labeled
/// as such; no claim of optimality is made.
struct TwoUseReport {
    double single_use_bits = 0.0;
    double two_use_bits = 0.0;
    double ratio = 0.0;
    bool lower_bound = true;
};

inline TwoUseReport two_use_vs_single_use(const KrausChannel& channel, int budget = 8,
                                          std::uint64_t seed = 42) {
    if (budget < 1) throw ParameterOutOfRange("budget must be at least 1");
    TwoUseReport report;
    const int restarts = std::max(2, budget / 2);

    // Single use, n = 2: the best discrimination pair is a strong input
    // candidate; sigma_3 eigenstates cover commuting-noise channels.
    {
        double best = 0.0;
        std::vector<std::vector<Vec>> candidates;
        candidates.push_back({Vec{1.0, 0.0}, Vec{0.0, 1.0}});
        candidates.push_back({Vec{std::sqrt(0.5), std::sqrt(0.5)},
                              Vec{std::sqrt(0.5), -std::sqrt(0.5)}});
        for (const auto& cand : candidates) {
            std::vector<DensityMatrix> outputs;
            for (const auto& v : cand) outputs.push_back(channel.apply(DensityMatrix::pure(v)));
            best = std::max(best,
                            capacity_fixed_outputs(outputs, restarts, 10, seed).bits);
        }
        report.single_use_bits = best;
    }

    // Two uses: an n = 4 orthonormal encoding (computational product
    // basis) and the best n = 2 entangled pair found by the seesaw.
    {
        double best = 0.0;
        {
            std::vector<DensityMatrix> outputs;
            for (std::size_t k = 0; k < 4; ++k) {
                Vec v(4, Complex(0.0, 0.0));
                v[k] = 1.0;
                outputs.push_back(channel.apply_two(DensityMatrix::pure(v)));
            }
            best = std::max(best, capacity_fixed_outputs(outputs, restarts, 4, seed).bits);
        }
        {
            const SearchReport pair = seesaw(channel, seed, 200, restarts);
            std::vector<DensityMatrix> outputs{channel.apply_two(pair.best_pair.state0()),
                                               channel.apply_two(pair.best_pair.state1())};
            best = std::max(best, capacity_fixed_outputs(outputs, restarts, 10, seed).bits);
        }
        report.two_use_bits = best;
    }

    report.ratio = report.single_use_bits > 0.0 ? report.two_use_bits / report.single_use_bits
                                                : 0.0;
    return report;
}

}  // namespace qdiscrim
