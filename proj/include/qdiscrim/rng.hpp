/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cmath>
#include <cstdint>

namespace qdiscrim {

//=========================================================================
// CounterRng: 64-bit counter-based generator with splittable streams
//=========================================================================
//
// Draw i of a stream is finalize(key + i * GAMMA) -- the SplitMix64
// output function -- so a stream's values depend only on (key, i) and
// never on how many values other streams consumed. stream(idx) derives a
// child key deterministically, which is what makes sweeps, restarts and
// Monte Carlo partitions reproducible regardless of scheduling.

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        counter_ += kGamma;
        return finalize(key_ + counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; draws are cached in pairs.
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * kPi * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    /// Independent child stream; children of distinct idx never collide.
    CounterRng stream(std::uint64_t idx) const {
        return CounterRng(finalize(key_ ^ finalize(kStreamSalt + idx * kGamma)));
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kStreamSalt = 0x8BB84B93962EACC9ull;
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace qdiscrim
