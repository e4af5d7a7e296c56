/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "qdiscrim/channel.hpp"
#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/parallel.hpp"
#include "qdiscrim/rng.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

//=========================================================================
// Nelder-Mead simplex search
//=========================================================================
//
// The trace-norm objective has |.| kinks, so the search backend is
// derivative-free by design.

struct NelderMeadResult {
    std::vector<double> x;
    double fval = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

inline NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                    std::vector<double> x0, double step, int max_iters,
                                    double ftol = 1e-12) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    NelderMeadResult result;
    std::vector<std::size_t> order(n + 1);
    for (; result.iterations < max_iters; ++result.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front(), worst = order.back();
        const std::size_t second_worst = order[n - 1];

        if (fv[worst] - fv[best] < ftol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (auto& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
            return p;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double fr = f(reflected);
        if (fr < fv[order[0]]) {
            const std::vector<double> expanded = blend(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                fv[worst] = fe;
            } else {
                simplex[worst] = reflected;
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            simplex[worst] = reflected;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
            const double fc = f(contracted);
            if (fc < std::min(fr, fv[worst])) {
                simplex[worst] = contracted;
                fv[worst] = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    result.x = simplex[best];
    result.fval = fv[best];
    return result;
}

/// Golden-section minimization of a unimodal function on [lo, hi].
inline std::pair<double, double> golden_section_min(const std::function<double(double)>& f,
                                                    double lo, double hi, double xtol = 1e-10) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

//=========================================================================
// Orthonormal-pair parameterization
//=========================================================================
//
// An ordered pair of orthonormal 4-vectors is decoded as the first two
// columns of a 4x4 unitary built from six complex Givens rotations (an
// angle and a phase each) followed by four diagonal phases. The pair is
// orthonormal for every parameter value; the redundancy keeps the map
// smooth everywhere.

inline constexpr std::size_t kPairParamCount = 16;

namespace detail {

inline constexpr std::pair<std::size_t, std::size_t> kGivensPlanes[6] = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace detail

/// 4x4 unitary from 16 parameters; surjective onto U(4).
inline ComplexMatrix unitary_from_angles(std::span<const double> angles) {
    if (angles.size() != kPairParamCount)
        throw ParameterOutOfRange("pair parameterization expects 16 angles");
    ComplexMatrix u = ComplexMatrix::identity(4);
    for (std::size_t g = 0; g < 6; ++g) {
        const auto [i, j] = detail::kGivensPlanes[g];
        const double theta = angles[2 * g];
        const double phi = angles[2 * g + 1];
        ComplexMatrix r = ComplexMatrix::identity(4);
        const Complex e = std::polar(1.0, phi);
        r(i, i) = std::cos(theta);
        r(j, j) = std::cos(theta);
        r(i, j) = -std::sin(theta) * e;
        r(j, i) = std::sin(theta) * std::conj(e);
        u = u * r;
    }
    ComplexMatrix d(4, 4);
    for (std::size_t k = 0; k < 4; ++k) d(k, k) = std::polar(1.0, angles[12 + k]);
    return u * d;
}

/// Decodes the ordered orthonormal pair (columns 0 and 1).
inline std::pair<Vec, Vec> decode_pair(std::span<const double> angles) {
    const ComplexMatrix u = unitary_from_angles(angles);
    Vec v0(4), v1(4);
    for (std::size_t i = 0; i < 4; ++i) {
        v0[i] = u(i, 0);
        v1[i] = u(i, 1);
    }
    return {std::move(v0), std::move(v1)};
}

namespace detail {

/// Unitary frame whose first two columns span one of the six Bell-pair
/// planes. Composing the parameterization with a fixed frame is only a
/// relabeling of the search space, but starting a restart there puts the
/// simplex in a different attraction basin than a uniform random start.
inline ComplexMatrix bell_plane_frame(std::size_t plane) {
    const auto [i, j] = kGivensPlanes[plane % 6];
    std::vector<std::size_t> order{i, j};
    for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j) order.push_back(k);
    const ComplexMatrix& bell = bell_basis();
    ComplexMatrix frame(4, 4);
    for (std::size_t col = 0; col < 4; ++col)
        for (std::size_t row = 0; row < 4; ++row) frame(row, col) = bell(row, order[col]);
    return frame;
}

}  // namespace detail

//=========================================================================
// Search reports
//=========================================================================

struct SearchReport {
    double best_pe = std::numeric_limits<double>::infinity();
    SignalPair best_pair;
    int restarts_used = 0;
    bool converged = false;
    std::vector<double> history;  // per-restart best values
    bool monotone = true;         // seesaw only: objective never decreased
    double worst_backstep = 0.0;  // seesaw only: largest observed decrease

    SearchReport()
        : best_pair(SignalPair::pure(Vec{1.0, 0.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0, 0.0})) {}
};

namespace detail {

inline double pair_error(const KrausChannel& channel, const Vec& v0, const Vec& v1) {
    const DensityMatrix r0 = channel.apply_two(DensityMatrix::pure(v0));
    const DensityMatrix r1 = channel.apply_two(DensityMatrix::pure(v1));
    return helstrom_error(r0, r1).pe;
}

}  // namespace detail

//=========================================================================
// Direct search over orthonormal input pairs (two channel uses)
//=========================================================================

/// Random-restart Nelder-Mead over the 16-angle pair parameterization.
/// Deterministic given the seed; restarts may run concurrently.
inline SearchReport search_optimal_inputs(const KrausChannel& channel, int restarts = 32,
                                          std::uint64_t seed = 42, int max_iters = 2000,
                                          int workers = 1) {
    if (channel.dim() != 2) throw DimensionMismatch("input search expects a qubit channel");
    if (restarts < 1) throw ParameterOutOfRange("restarts must be at least 1");

    struct RestartResult {
        NelderMeadResult nm;
        std::size_t frame;  // 0: none, 1 + k: Bell plane k
    };
    std::vector<RestartResult> results(restarts);

    auto frame_pair = [&](std::size_t frame, std::span<const double> angles) {
        if (frame == 0) return decode_pair(angles);
        const ComplexMatrix u =
            detail::bell_plane_frame(frame - 1) * unitary_from_angles(angles);
        Vec v0(4), v1(4);
        for (std::size_t i = 0; i < 4; ++i) {
            v0[i] = u(i, 0);
            v1[i] = u(i, 1);
        }
        return std::make_pair(std::move(v0), std::move(v1));
    };

    const CounterRng root(seed);
    parallel_for(static_cast<std::size_t>(restarts), workers, [&](std::size_t r) {
        CounterRng rng = root.stream(r);
        // Every fourth restart explores from inside one of the six
        // Bell-pair planes (a random in-plane rotation, plus jitter); the
        // rest start from uniform random angles. Both kinds search the
        // same space, they just seed different basins.
        std::size_t frame = 0;
        std::vector<double> x0(kPairParamCount);
        if (r % 4 == 3) {
            frame = 1 + (r / 4) % 6;
            for (auto& a : x0) a = 0.05 * rng.gaussian();
            x0[0] = rng.uniform() * 2.0 * 3.14159265358979323846;  // in-plane rotation
        } else {
            for (auto& a : x0) a = rng.uniform() * 2.0 * 3.14159265358979323846;
        }
        auto objective = [&](std::span<const double> angles) {
            const auto [v0, v1] = frame_pair(frame, angles);
            return detail::pair_error(channel, v0, v1);
        };
        // The |.| kinks of the trace-norm objective collapse a single
        // simplex early; re-seeding it around the incumbent with a
        // smaller step restores progress along the kinked directions.
        NelderMeadResult best = nelder_mead(objective, std::move(x0), 0.4, max_iters);
        for (double step : {0.1, 0.025}) {
            NelderMeadResult next = nelder_mead(objective, best.x, step, max_iters);
            next.converged = next.converged || best.converged;
            if (next.fval < best.fval) best = std::move(next);
        }
        results[r].nm = std::move(best);
        results[r].frame = frame;
    });

    SearchReport report;
    report.restarts_used = restarts;
    report.history.reserve(restarts);
    int best_index = 0;
    for (int r = 0; r < restarts; ++r) {
        report.history.push_back(results[r].nm.fval);
        if (results[r].nm.fval < results[best_index].nm.fval) best_index = r;
        report.converged = report.converged || results[r].nm.converged;
    }
    report.best_pe = results[best_index].nm.fval;
    const auto [v0, v1] =
        frame_pair(results[best_index].frame, results[best_index].nm.x);
    report.best_pair = SignalPair::pure(v0, v1);
    return report;
}

/// Best error probability over same-state product encodings
/// rho (x) rho vs rho_perp (x) rho_perp with orthogonal pure single-qubit
/// inputs, via Nelder-Mead over the two Bloch angles.
inline SearchReport search_product_inputs(const KrausChannel& channel, int restarts = 8,
                                          std::uint64_t seed = 42, int max_iters = 400) {
    if (channel.dim() != 2) throw DimensionMismatch("product search expects a qubit channel");

    auto make_pair = [](double theta, double phi) {
        const Complex e = std::polar(1.0, phi);
        const Vec p0{std::cos(0.5 * theta), e * std::sin(0.5 * theta)};
        const Vec p1{std::sin(0.5 * theta), -e * std::cos(0.5 * theta)};
        return std::make_pair(kron(p0, p0), kron(p1, p1));
    };
    auto objective = [&](std::span<const double> a) {
        const auto [v0, v1] = make_pair(a[0], a[1]);
        return detail::pair_error(channel, v0, v1);
    };

    SearchReport report;
    report.restarts_used = restarts;
    const CounterRng root(seed);
    NelderMeadResult best;
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.stream(r);
        std::vector<double> x0{rng.uniform() * 3.14159265358979323846,
                               rng.uniform() * 2.0 * 3.14159265358979323846};
        NelderMeadResult nm = nelder_mead(objective, std::move(x0), 0.3, max_iters);
        report.history.push_back(nm.fval);
        report.converged = report.converged || nm.converged;
        if (nm.fval < best.fval) best = std::move(nm);
    }
    report.best_pe = best.fval;
    const auto [v0, v1] = make_pair(best.x[0], best.x[1]);
    report.best_pair = SignalPair::pure(v0, v1);
    return report;
}

//=========================================================================
// Seesaw (alternating exact maximization)
//=========================================================================
//
// Maximizes tr|Phi(rho1 - rho0)| by alternating two closed-form argmax
// steps: (1) with the inputs fixed, the unitary achieving
// max_U Re tr(U A) = tr|A| is built from the spectral decomposition of
// A = Phi(rho1 - rho0); (2) with U fixed, the optimal inputs are the
// extreme eigenprojectors of the conjugate-map image Phi*(U + U†). Both
// half-steps can only increase the shared objective
// tr((rho1 - rho0) Phi*(U + U†))/2.

inline SearchReport seesaw(const KrausChannel& channel, std::uint64_t seed = 42,
                           int max_iters = 200, int restarts = 32) {
    if (restarts < 1) throw ParameterOutOfRange("restarts must be at least 1");
    const auto& kraus = channel.two_use_operators();
    const std::size_t d = channel.dim() * channel.dim();

    auto conjugate_map = [&](const ComplexMatrix& x) {
        ComplexMatrix out(d, d);
        for (const auto& k : kraus) out += k.adjoint() * x * k;
        return out;
    };

    SearchReport report;
    report.restarts_used = restarts;
    const CounterRng root(seed);

    double global_best = -1.0;
    Vec best_v1, best_v0;
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.stream(r);
        Vec v1 = random_pure(d, rng);
        Vec v0 = random_pure(d, rng);
        {  // orthogonalize the second start vector against the first
            const Complex proj = inner(v1, v0);
            for (std::size_t i = 0; i < d; ++i) v0[i] -= proj * v1[i];
            if (vec_norm(v0) < 1e-8) v0 = random_pure(d, rng);
            v0 = normalized(v0);
        }

        double prev = -std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int it = 0; it < max_iters; ++it) {
            // U-step: objective becomes tr|Phi(rho1 - rho0)|.
            const ComplexMatrix delta = channel.apply_two_raw(outer(v1) - outer(v0));
            const Spectrum ds = hermitian_eig(delta);
            ComplexMatrix u(d, d);
            double unitary_objective = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double sign = ds.eigenvalues[k] >= 0.0 ? 1.0 : -1.0;
                unitary_objective += std::abs(ds.eigenvalues[k]);
                u += outer(spectrum_column(ds, k)) * Complex(sign, 0.0);
            }
            if (unitary_objective < prev - 1e-12) {
                report.monotone = false;
                report.worst_backstep = std::max(report.worst_backstep, prev - unitary_objective);
            }

            // Input step: extreme eigenprojectors of Phi*(U + U†).
            const ComplexMatrix m = conjugate_map(u + u.adjoint());
            const Spectrum ms = hermitian_eig(m);
            v1 = spectrum_column(ms, 0);
            v0 = spectrum_column(ms, d - 1);
            const double objective = 0.5 * (ms.eigenvalues.front() - ms.eigenvalues.back());
            if (objective < unitary_objective - 1e-12) {
                report.monotone = false;
                report.worst_backstep =
                    std::max(report.worst_backstep, unitary_objective - objective);
            }
            if (objective - prev < 1e-12) {
                prev = std::max(prev, objective);
                converged = true;
                break;
            }
            prev = objective;
        }

        const double pe = 0.5 - 0.25 * prev;
        report.history.push_back(pe);
        report.converged = report.converged || converged;
        if (prev > global_best) {
            global_best = prev;
            best_v1 = v1;
            best_v0 = v0;
        }
    }

    report.best_pe = std::max(0.0, 0.5 - 0.25 * global_best);
    report.best_pair = SignalPair::pure(best_v0, best_v1);
    return report;
}

//=========================================================================
// Dominance of orthogonal pure inputs
//=========================================================================

struct DominanceReport {
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    double reference_pe = 0.0;
};

/// Draws random mixed and nonorthogonal pure input pairs and checks that
/// none of them beats the orthogonal-pure optimum by more than 1e-9.
/// worst_margin is the smallest observed (pe_random - reference).
inline DominanceReport dominance_check(const KrausChannel& channel, std::size_t samples,
                                       std::uint64_t seed) {
    if (samples < 1) throw ParameterOutOfRange("dominance check needs at least one sample");
    const std::size_t d = channel.dim() * channel.dim();

    DominanceReport report;
    report.samples = samples;
    report.reference_pe = search_optimal_inputs(channel, 32, seed).best_pe;

    const CounterRng root(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        CounterRng rng = root.stream(0xD0000000ull + k);
        double pe;
        if (k % 2 == 0) {
            const DensityMatrix r0 = random_density(d, rng);
            const DensityMatrix r1 = random_density(d, rng);
            pe = helstrom_error(channel.apply_two(r0), channel.apply_two(r1)).pe;
        } else {
            const Vec v0 = random_pure(d, rng);
            const Vec v1 = random_pure(d, rng);  // generically nonorthogonal
            pe = detail::pair_error(channel, v0, v1);
        }
        const double margin = pe - report.reference_pe;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -1e-9) ++report.violations;
    }
    return report;
}

}  // namespace qdiscrim
