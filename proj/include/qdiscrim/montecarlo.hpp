/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "qdiscrim/channel.hpp"
#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/parallel.hpp"
#include "qdiscrim/rng.hpp"

namespace qdiscrim {

//=========================================================================
// Stochastic unraveling of a Kraus channel
//=========================================================================

struct KrausSample {
    std::size_t index;
    Vec post_state;
};

struct TrialRecord {
    int bit_sent;
    std::array<std::size_t, 2> kraus_indices;
    int outcome;
    bool correct;
};

/// Samples which Kraus event occurred: event i fires with probability
/// ||A_i psi||^2 and leaves the renormalized post-state A_i psi. The
/// given decomposition is used verbatim, with no canonicalization.
inline KrausSample sample_channel(const KrausChannel& channel, const Vec& psi, CounterRng& rng) {
    if (psi.size() != channel.dim())
        throw DimensionMismatch("state dimension does not match channel");
    if (std::abs(vec_norm(psi) - 1.0) > 1e-10)
        throw InvalidState("sampling expects a unit state vector");

    std::vector<Vec> branches;
    branches.reserve(channel.size());
    std::vector<double> weights(channel.size());
    for (std::size_t i = 0; i < channel.size(); ++i) {
        branches.push_back(apply_matrix(channel.operators()[i], psi));
        const double n = vec_norm(branches.back());
        weights[i] = n * n;
    }

    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t chosen = channel.size() - 1;
    for (std::size_t i = 0; i < channel.size(); ++i) {
        cumulative += weights[i];
        if (u < cumulative) {
            chosen = i;
            break;
        }
    }
    if (vec_norm(branches[chosen]) < 1e-14)
        throw ZeroNormBranch("sampled a Kraus branch of essentially zero probability");
    return KrausSample{chosen, normalized(std::move(branches[chosen]))};
}

namespace detail {

/// Lifts a single-qubit Kraus set to one leg of the two-use space so the
/// two noise events can be drawn one transmission at a time.
inline KrausChannel leg_channel(const KrausChannel& channel, bool first_leg) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(channel.size());
    const ComplexMatrix eye = ComplexMatrix::identity(channel.dim());
    for (const auto& a : channel.operators())
        ops.push_back(first_leg ? tensor(a, eye) : tensor(eye, a));
    return KrausChannel(channel.name() + (first_leg ? ":leg0" : ":leg1"), std::move(ops));
}

}  // namespace detail

/// Draws the two per-transmission Kraus events, one leg at a time. The
/// chain rule makes the pair (i, j) appear with probability
/// ||(A_i x A_j) psi||^2, exactly the two-use unraveling.
class TwoUseSampler {
public:
    explicit TwoUseSampler(const KrausChannel& channel)
        : leg0_(detail::leg_channel(channel, true)),
          leg1_(detail::leg_channel(channel, false)) {}

    std::pair<std::array<std::size_t, 2>, Vec> sample(const Vec& psi, CounterRng& rng) const {
        KrausSample first = sample_channel(leg0_, psi, rng);
        KrausSample second = sample_channel(leg1_, first.post_state, rng);
        return {{first.index, second.index}, std::move(second.post_state)};
    }

private:
    KrausChannel leg0_;
    KrausChannel leg1_;
};

inline std::pair<std::array<std::size_t, 2>, Vec> sample_two_use(const KrausChannel& channel,
                                                                 const Vec& psi,
                                                                 CounterRng& rng) {
    return TwoUseSampler(channel).sample(psi, rng);
}

//=========================================================================
// Empirical error rate of the Helstrom strategy
//=========================================================================

struct McEstimate {
    double empirical_pe = 0.0;
    double standard_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
};

namespace detail {

/// Trials are processed in fixed-size chunks, each owning the stream
/// (seed, chunk-index); totals are merged by summation, so the estimate
/// is identical for any worker count.
inline constexpr std::uint64_t kMcChunk = 8192;

}  // namespace detail

/// Estimates the error probability of the optimal (Helstrom) measurement
/// by simulation: sample the bit, sample the per-transmission Kraus
/// events, project the pure post-state onto the Helstrom eigenspaces.
/// standard_error is sqrt(p(1-p)/trials). Deterministic given the seed,
/// for any worker count.
inline McEstimate simulate_error_rate(const SignalPair& pair, const KrausChannel& channel,
                                      std::uint64_t trials, std::uint64_t seed,
                                      int workers = 1) {
    if (trials < 1) throw ParameterOutOfRange("trials must be at least 1");
    if (!pair.is_pure())
        throw InvalidState("error-rate simulation needs pure signal states");

    const bool two_use = pair.dim() == channel.dim() * channel.dim();
    if (!two_use && pair.dim() != channel.dim())
        throw DimensionMismatch("signal dimension matches neither one nor two channel uses");

    const DensityMatrix out0 =
        two_use ? channel.apply_two(pair.state0()) : channel.apply(pair.state0());
    const DensityMatrix out1 =
        two_use ? channel.apply_two(pair.state1()) : channel.apply(pair.state1());
    const DiscriminationResult helstrom =
        helstrom_error(out0, out1, pair.prior0(), pair.prior1());
    const ComplexMatrix& guess1 = helstrom.measurement.element(1);

    const TwoUseSampler sampler(channel);
    auto run_trial = [&](CounterRng& rng) {
        TrialRecord rec{};
        rec.bit_sent = rng.uniform() < pair.prior0() ? 0 : 1;
        const Vec& input = rec.bit_sent == 0 ? pair.vector0() : pair.vector1();

        Vec out;
        if (two_use) {
            auto [indices, post] = sampler.sample(input, rng);
            rec.kraus_indices = indices;
            out = std::move(post);
        } else {
            KrausSample s = sample_channel(channel, input, rng);
            rec.kraus_indices = {s.index, 0};
            out = std::move(s.post_state);
        }

        const double p1 = std::pow(vec_norm(apply_matrix(guess1, out)), 2);
        rec.outcome = rng.uniform() < p1 ? 1 : 0;
        rec.correct = rec.outcome == rec.bit_sent;
        return rec;
    };

    const std::uint64_t chunks = (trials + detail::kMcChunk - 1) / detail::kMcChunk;
    std::vector<std::uint64_t> chunk_errors(chunks, 0);
    const CounterRng root(seed);

    parallel_for(chunks, workers, [&](std::size_t c) {
        CounterRng rng = root.stream(c);
        const std::uint64_t begin = c * detail::kMcChunk;
        const std::uint64_t end = std::min(trials, begin + detail::kMcChunk);
        std::uint64_t errors = 0;
        for (std::uint64_t t = begin; t < end; ++t)
            if (!run_trial(rng).correct) ++errors;
        chunk_errors[c] = errors;
    });

    McEstimate est;
    est.trials = trials;
    for (std::uint64_t e : chunk_errors) est.errors += e;
    est.empirical_pe = static_cast<double>(est.errors) / static_cast<double>(trials);
    est.standard_error =
        std::sqrt(est.empirical_pe * (1.0 - est.empirical_pe) / static_cast<double>(trials));
    return est;
}

}  // namespace qdiscrim
