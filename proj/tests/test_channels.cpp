/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qdiscrim/channel.hpp"
#include "qdiscrim/discrimination.hpp"

using namespace qdiscrim;

TEST_CASE("completeness validation", "[channels]") {
    REQUIRE(two_pauli(0.5).completeness_residual() < 1e-12);
    REQUIRE(amplitude_damping(0.3).completeness_residual() < 1e-15);
    for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        REQUIRE(two_pauli(p).is_complete());
        REQUIRE(amplitude_damping(p).is_complete());
        REQUIRE(depolarizing(p).is_complete());
        REQUIRE(dephasing(p).is_complete());
    }

    SECTION("a scaled identity fails with the expected residual") {
        KrausChannel broken("scaled", {ComplexMatrix::identity(2) * Complex(0.9, 0.0)});
        REQUIRE_FALSE(broken.is_complete());
        REQUIRE(broken.completeness_residual() == Catch::Approx(0.19).margin(1e-12));
    }
}

TEST_CASE("channel parameter range", "[channels]") {
    REQUIRE_THROWS_AS(two_pauli(-0.1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(two_pauli(1.1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(amplitude_damping(2.0), ParameterOutOfRange);
    REQUIRE_THROWS_AS(depolarizing(-1e-9), ParameterOutOfRange);
    REQUIRE_THROWS_AS(dephasing(1.0 + 1e-6), ParameterOutOfRange);
}

TEST_CASE("single-use application", "[channels]") {
    const Vec up{1.0, 0.0}, down{0.0, 1.0};

    SECTION("x = 1 is the identity channel") {
        CounterRng rng(3);
        const KrausChannel ch = two_pauli(1.0);
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_density(2, rng);
            REQUIRE(max_abs_diff(ch.apply(rho).matrix(), rho.matrix()) < 1e-12);
        }
    }

    SECTION("x = 0 flips up to down") {
        const DensityMatrix out = two_pauli(0.0).apply(DensityMatrix::pure(up));
        REQUIRE(max_abs_diff(out.matrix(), outer(down)) < 1e-12);
    }

    SECTION("amplitude damping fixes the vacuum state") {
        for (double x : {0.0, 0.3, 0.7}) {
            const DensityMatrix out = amplitude_damping(x).apply(DensityMatrix::pure(down));
            REQUIRE(max_abs_diff(out.matrix(), outer(down)) < 1e-14);
        }
    }

    SECTION("amplitude damping at x = 0 empties the photon mode") {
        const DensityMatrix out = amplitude_damping(0.0).apply(DensityMatrix::pure(up));
        REQUIRE(max_abs_diff(out.matrix(), outer(down)) < 1e-14);
    }

    SECTION("amplitude damping at x = 1 is the identity channel") {
        CounterRng rng(5);
        const KrausChannel ch = amplitude_damping(1.0);
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_density(2, rng);
            REQUIRE(max_abs_diff(ch.apply(rho).matrix(), rho.matrix()) < 1e-14);
        }
    }

    SECTION("dimension mismatch is rejected") {
        REQUIRE_THROWS_AS(two_pauli(0.5).apply(DensityMatrix::maximally_mixed(4)),
                          DimensionMismatch);
        REQUIRE_THROWS_AS(two_pauli(0.5).apply_two(DensityMatrix::maximally_mixed(2)),
                          DimensionMismatch);
    }
}

TEST_CASE("two-use application", "[channels]") {
    SECTION("identity channel fixes a Bell state") {
        const Vec phi_plus = bell_to_computational(BellCoefficients{1.0, 0.0, 0.0, 0.0});
        const DensityMatrix out = two_pauli(1.0).apply_two(DensityMatrix::pure(phi_plus));
        REQUIRE(max_abs_diff(out.matrix(), outer(phi_plus)) < 1e-12);
    }

    SECTION("trace is preserved on the maximally mixed input") {
        const DensityMatrix out = two_pauli(0.3).apply_two(DensityMatrix::maximally_mixed(4));
        REQUIRE(out.matrix().trace().real() == Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("product inputs factorize") {
        CounterRng rng(17);
        for (const auto& make : {+[](double p) { return two_pauli(p); },
                                 +[](double p) { return amplitude_damping(p); },
                                 +[](double p) { return depolarizing(p); }}) {
            for (int trial = 0; trial < 8; ++trial) {
                const double p = rng.uniform();
                const KrausChannel ch = make(p);
                const DensityMatrix r0 = random_density(2, rng);
                const DensityMatrix r1 = random_density(2, rng);
                const DensityMatrix joint =
                    ch.apply_two(DensityMatrix(tensor(r0.matrix(), r1.matrix())));
                const ComplexMatrix factored =
                    tensor(ch.apply(r0).matrix(), ch.apply(r1).matrix());
                REQUIRE(max_abs_diff(joint.matrix(), factored) < 1e-10);
            }
        }
    }

    SECTION("outputs stay valid states over random inputs") {
        CounterRng rng(19);
        const std::vector<KrausChannel (*)(double)> families = {
            &two_pauli, &amplitude_damping, &depolarizing, &dephasing};
        for (int trial = 0; trial < 120; ++trial) {
            const double p = rng.uniform();
            const KrausChannel ch = families[trial % families.size()](p);
            // DensityMatrix construction re-validates trace, hermiticity
            // and positivity, so surviving the call is the assertion.
            const DensityMatrix single = ch.apply(random_density(2, rng));
            REQUIRE(single.matrix().trace().real() == Catch::Approx(1.0).margin(1e-10));
            const DensityMatrix out = ch.apply_two(random_density(4, rng));
            REQUIRE(out.matrix().trace().real() == Catch::Approx(1.0).margin(1e-10));
            REQUIRE(hermitian_eig(out.matrix()).eigenvalues.back() >= -1e-10);
        }
    }
}

TEST_CASE("Bloch-sphere action of the two-Pauli channel", "[channels]") {
    SECTION("published component maps") {
        const BlochVector b1 = bloch_action_two_pauli({1.0, 0.0, 0.0}, 0.5);
        REQUIRE(b1.a1 == Catch::Approx(0.5).margin(1e-15));
        REQUIRE(b1.a2 == 0.0);
        REQUIRE(b1.a3 == 0.0);
        const BlochVector b3 = bloch_action_two_pauli({0.0, 0.0, 1.0}, 0.5);
        REQUIRE(b3.a3 == Catch::Approx(0.0).margin(1e-15));
    }

    SECTION("x = 1 is the identity on the Bloch ball") {
        const BlochVector a{0.3, -0.4, 0.5};
        const BlochVector b = bloch_action_two_pauli(a, 1.0);
        REQUIRE(b.a1 == a.a1);
        REQUIRE(b.a2 == a.a2);
        REQUIRE(b.a3 == a.a3);
    }

    SECTION("closed form agrees with apply() on 100 seeded cases") {
        CounterRng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            BlochVector a{rng.gaussian(), rng.gaussian(), rng.gaussian()};
            const double len = std::sqrt(a.squared_length());
            const double scale = rng.uniform() / std::max(len, 1e-12);
            a = {a.a1 * scale, a.a2 * scale, a.a3 * scale};
            const double x = rng.uniform();

            const BlochVector b = bloch_action_two_pauli(a, x);
            const DensityMatrix direct = two_pauli(x).apply(bloch_state(a));
            REQUIRE(max_abs_diff(direct.matrix(), bloch_state(b).matrix()) < 1e-10);
        }
    }

    SECTION("output eigenvalues follow the closed form for pure inputs") {
        CounterRng rng(37);
        for (int trial = 0; trial < 60; ++trial) {
            BlochVector a{rng.gaussian(), rng.gaussian(), rng.gaussian()};
            const double len = std::sqrt(a.squared_length());
            a = {a.a1 / len, a.a2 / len, a.a3 / len};
            const double x = rng.uniform();

            const Spectrum s = hermitian_eig(two_pauli(x).apply(bloch_state(a)).matrix());
            const double radius = std::sqrt((a.a1 * a.a1 + a.a2 * a.a2) * x * x +
                                            a.a3 * a.a3 * (2.0 * x - 1.0) * (2.0 * x - 1.0));
            REQUIRE(s.eigenvalues[0] == Catch::Approx(0.5 + 0.5 * radius).margin(1e-10));
            REQUIRE(s.eigenvalues[1] == Catch::Approx(0.5 - 0.5 * radius).margin(1e-10));
        }
    }

    SECTION("commuting inputs keep commuting outputs through one use") {
        CounterRng rng(41);
        for (int trial = 0; trial < 50; ++trial) {
            BlochVector a{rng.gaussian(), rng.gaussian(), rng.gaussian()};
            const double len = std::sqrt(a.squared_length());
            a = {a.a1 / len, a.a2 / len, a.a3 / len};
            const double x = rng.uniform();
            const KrausChannel ch = two_pauli(x);
            const DensityMatrix outp = ch.apply(bloch_state(a, +1));
            const DensityMatrix outm = ch.apply(bloch_state(a, -1));
            REQUIRE(commutator_norm(outp.matrix(), outm.matrix()) < 1e-10);
        }
    }

    SECTION("overlong Bloch vectors are rejected") {
        REQUIRE_THROWS_AS(bloch_state({1.0, 1.0, 0.0}), ParameterOutOfRange);
    }
}

TEST_CASE("depolarizing and dephasing behave as named", "[channels]") {
    SECTION("depolarizing(0) is the identity") {
        CounterRng rng(43);
        const DensityMatrix rho = random_density(2, rng);
        REQUIRE(max_abs_diff(depolarizing(0.0).apply(rho).matrix(), rho.matrix()) < 1e-12);
    }

    SECTION("depolarizing shrinks the Bloch ball isotropically") {
        const std::vector<BlochVector> axes = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                               {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        for (double p : {0.2, 0.6, 1.0}) {
            const KrausChannel ch = depolarizing(p);
            for (const auto& a : axes) {
                const DensityMatrix out = ch.apply(bloch_state(a));
                const BlochVector shrunk{a.a1 * (1.0 - p), a.a2 * (1.0 - p), a.a3 * (1.0 - p)};
                REQUIRE(max_abs_diff(out.matrix(), bloch_state(shrunk).matrix()) < 1e-12);
            }
        }
    }

    SECTION("sigma3 eigenstates pass a dephasing channel noiselessly") {
        const Vec up{1.0, 0.0}, down{0.0, 1.0};
        for (double x : {0.0, 0.3, 0.8}) {
            const KrausChannel ch = dephasing(x);
            const DiscriminationResult r =
                helstrom_error(ch.apply(DensityMatrix::pure(up)),
                               ch.apply(DensityMatrix::pure(down)));
            REQUIRE(r.pe == Catch::Approx(0.0).margin(1e-12));
        }
    }
}

TEST_CASE("JSON channel format", "[channels]") {
    SECTION("round trip through the schema") {
        const KrausChannel original = two_pauli(0.7);
        const KrausChannel loaded = channel_from_json(channel_to_json(original));
        REQUIRE(loaded.dim() == 2);
        REQUIRE(loaded.size() == 3);
        CounterRng rng(47);
        const DensityMatrix rho = random_density(2, rng);
        REQUIRE(max_abs_diff(loaded.apply(rho).matrix(), original.apply(rho).matrix()) <
                1e-14);
    }

    SECTION("incomplete channels are rejected with the residual quoted") {
        KrausChannel broken("broken", {ComplexMatrix::identity(2) * Complex(0.9, 0.0)});
        try {
            channel_from_json(channel_to_json(broken));
            FAIL("expected ChannelFormatError");
        } catch (const ChannelFormatError& e) {
            REQUIRE(std::string(e.what()).find("0.19") != std::string::npos);
        }
    }

    SECTION("malformed documents are rejected") {
        nlohmann::json j;
        j["name"] = "nameless";
        REQUIRE_THROWS_AS(channel_from_json(j), ChannelFormatError);
        REQUIRE_THROWS_AS(load_channel("/nonexistent/channel.json"), ChannelFormatError);
    }

    SECTION("file round trip") {
        const std::string path = "json_roundtrip_channel.json";
        {
            std::ofstream out(path);
            out << channel_to_json(amplitude_damping(0.4)).dump(2);
        }
        const KrausChannel loaded = load_channel(path);
        REQUIRE(loaded.name() == "amplitude_damping");
        REQUIRE(loaded.completeness_residual() < 1e-12);
        std::remove(path.c_str());
    }
}
