/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit if anything fails. Tolerances are pinned in the checks
// themselves. Each criterion also carries a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdiscrim/qdiscrim.hpp"

using namespace qdiscrim;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

//-------------------------------------------------------------------------
// 1. Table reproduction
//-------------------------------------------------------------------------
bool criterion_table(std::string& detail) {
    bool ok = true;
    for (const TableRow& row : published_table()) {
        const double product = product_baseline_pe(row.x);
        const double entangled = optimal_entangled(row.x).pe;
        ok = ok && close(entangled, row.published_entangled, 5e-6);
        if (row.product_misprint) {
            // The published 0.010000 contradicts the piecewise formula;
            // the computed column must carry the formula value.
            ok = ok && close(product, 0.100000, 5e-6);
        } else {
            ok = ok && close(product, row.published_product, 5e-6);
        }
    }
    detail = "six rows within 5e-6; x=.80 product pinned to the formula value 0.100000";
    return ok;
}

//-------------------------------------------------------------------------
// 2. Ansatz validity threshold
//-------------------------------------------------------------------------
bool criterion_threshold(std::string& detail) {
    const double xstar = ansatz_threshold();
    const double residual = std::abs(ansatz_boundary_residual(xstar));
    detail = "x* = " + fmt(xstar) + ", boundary residual = " + fmt(residual);
    return close(xstar, 0.227539, 1e-6) && residual < 1e-9;
}

//-------------------------------------------------------------------------
// 3. Closed forms versus brute force
//-------------------------------------------------------------------------
bool criterion_closed_forms(std::string& detail) {
    double worst_pe = 0.0;
    for (int ia = 0; ia < 100; ++ia) {
        const double alpha = kPi * ia / 99.0;
        const SignalPair pair = ansatz_states(alpha);
        for (int ix = 0; ix < 100; ++ix) {
            const double x = ix / 99.0;
            const KrausChannel ch = two_pauli(x);
            const double brute = helstrom_error(ch.apply_two(pair.state0()),
                                                ch.apply_two(pair.state1()))
                                     .pe;
            worst_pe = std::max(worst_pe, std::abs(ansatz_pe(alpha, x) - brute));
        }
    }

    double worst_matrix = 0.0;
    CounterRng rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto c = oracles::random_real_unit4(rng);
        const BellCoefficients coeffs{c[0], c[1], c[2], c[3]};
        const double x = rng.uniform();
        const DensityMatrix closed = two_pauli_output_bell(coeffs, x);
        const DensityMatrix brute =
            two_pauli(x).apply_two(DensityMatrix::pure(bell_to_computational(coeffs)));
        worst_matrix =
            std::max(worst_matrix, max_abs_diff(closed.matrix(), to_bell_basis(brute.matrix())));
    }
    detail = "worst pe deviation " + fmt(worst_pe) + ", worst matrix deviation " +
             fmt(worst_matrix) + " over 100x100 grid and 200 seeded cases";
    return worst_pe < 1e-10 && worst_matrix < 1e-10;
}

//-------------------------------------------------------------------------
// 4. Advantage regime boundaries
//-------------------------------------------------------------------------
bool criterion_advantage(std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 99; ++k) {
        const double x = k / 100.0;
        const double product = product_baseline_pe(x);
        if (x > 1.0 / 3.0) {
            ok = ok && optimal_entangled(x).pe < product;
        } else {
            const double best = golden_section_min(
                                    [x](double a) { return ansatz_pe(a, x); }, 0.0, kPi / 4.0,
                                    1e-12)
                                    .second;
            ok = ok && best >= product - 1e-9;
        }
    }
    const double boundary = optimal_entangled(1.0 / 3.0).pe;
    ok = ok && close(boundary, 1.0 / 3.0, 1e-12);
    detail = "strict advantage on (1/3,1), none on (0,1/3], pe(1/3) = " + fmt(boundary);
    return ok;
}

//-------------------------------------------------------------------------
// 5. Optimizer concordance
//-------------------------------------------------------------------------
bool criterion_optimizers(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    for (double x : {0.4, 0.5, 0.7, 0.9}) {
        const double target = optimal_entangled(x).pe;
        const SearchReport direct = search_optimal_inputs(two_pauli(x), 32, 42);
        const SearchReport alternating = seesaw(two_pauli(x), 42, 200, 32);
        worst = std::max({worst, std::abs(direct.best_pe - target),
                          std::abs(alternating.best_pe - target)});
        ok = ok && close(direct.best_pe, target, 1e-6) &&
             close(alternating.best_pe, target, 1e-6) && alternating.monotone;
    }
    detail = "both engines within " + fmt(worst) + " of the closed form; seesaw monotone";
    return ok;
}

//-------------------------------------------------------------------------
// 6. Commutation claims
//-------------------------------------------------------------------------
bool criterion_commutation(std::string& detail) {
    bool ok = commutation_probe(noncommuting_example_pair(), 0.5) > 1e-6;

    CounterRng rng(5);
    double worst_commuting = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t b1 = rng.index(4);
        std::size_t b2 = rng.index(3);
        if (b2 >= b1) ++b2;
        const double alpha = rng.uniform() * 2.0 * kPi;
        const double x = rng.uniform();
        worst_commuting =
            std::max(worst_commuting, commutation_probe(bell_plane_pair(b1, b2, alpha), x));
    }
    ok = ok && worst_commuting < 1e-10;

    const std::vector<double> grid = {0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
    const SignalPair cross = cross_plane_pair(0.55, 0.95);
    for (double x : grid) {
        const double norm = commutation_probe(cross, x);
        const bool commutes = x == 0.0 || x == 1.0 || std::abs(x - 1.0 / 3.0) < 1e-15;
        ok = ok && (commutes ? norm < 1e-10 : norm > 1e-8);
    }
    detail = "counterexample > 1e-6; Bell-plane worst " + fmt(worst_commuting) +
             "; cross-plane commutes only at {0, 1/3, 1}";
    return ok;
}

//-------------------------------------------------------------------------
// 7. Appendix dominance
//-------------------------------------------------------------------------
bool criterion_dominance(std::string& detail) {
    const DominanceReport a = dominance_check(two_pauli(0.5), 500, 42);
    const DominanceReport b = dominance_check(amplitude_damping(0.6), 500, 42);
    detail = "violations " + std::to_string(a.violations) + " / " +
             std::to_string(b.violations) + ", worst margins " + fmt(a.worst_margin) +
             " / " + fmt(b.worst_margin);
    return a.violations == 0 && b.violations == 0;
}

//-------------------------------------------------------------------------
// 8. Depolarizing null result
//-------------------------------------------------------------------------
bool criterion_depolarizing(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double p = k / 10.0;
        const KrausChannel ch = depolarizing(p);
        const double product = search_product_inputs(ch, 8, 42).best_pe;
        const double searched = search_optimal_inputs(ch, 32, 42).best_pe;
        const double alternating = seesaw(ch, 42, 200, 32).best_pe;
        worst = std::max({worst, std::abs(searched - product),
                          std::abs(alternating - product)});
        ok = ok && close(searched, product, 1e-6) && close(alternating, product, 1e-6);
    }
    detail = "entangled search matches the product baseline within " + fmt(worst);
    return ok;
}

//-------------------------------------------------------------------------
// 9. Amplitude-damping advantage
//-------------------------------------------------------------------------
bool criterion_amplitude_damping(std::string& detail) {
    double best_gain = -1.0;
    double best_x = 0.0;
    for (int k = 1; k <= 19; ++k) {
        const double x = k / 20.0;
        const KrausChannel ch = amplitude_damping(x);
        const double product = search_product_inputs(ch, 8, 42).best_pe;
        const double entangled = seesaw(ch, 42, 200, 16).best_pe;
        if (product - entangled > best_gain) {
            best_gain = product - entangled;
            best_x = x;
        }
    }
    detail = "largest advantage " + fmt(best_gain) + " at x = " + fmt(best_x);
    return best_gain > 1e-5;
}

//-------------------------------------------------------------------------
// 10. Monte Carlo consistency
//-------------------------------------------------------------------------
bool criterion_monte_carlo(std::string& detail) {
    const SignalPair entangled = ansatz_states(optimal_entangled(0.5).alpha);
    const McEstimate a = simulate_error_rate(entangled, two_pauli(0.5), 1000000, 42, 0);
    const double dev_a = std::abs(a.empirical_pe - 0.241801) / a.standard_error;

    const double s = std::sqrt(0.5);
    const SignalPair product =
        SignalPair::pure(kron(Vec{s, s}, Vec{s, s}), kron(Vec{s, -s}, Vec{s, -s}));
    const McEstimate b = simulate_error_rate(product, two_pauli(0.8), 1000000, 43, 0);
    const double dev_b = std::abs(b.empirical_pe - 0.1) / b.standard_error;

    detail = "deviations " + fmt(dev_a) + " and " + fmt(dev_b) + " standard errors";
    return dev_a <= 4.0 && dev_b <= 4.0;
}

//-------------------------------------------------------------------------
// 11. Information layer
//-------------------------------------------------------------------------
bool criterion_information(std::string& detail) {
    const Vec up{1.0, 0.0}, down{0.0, 1.0};
    const Povm z_basis({outer(up), outer(down)});

    const double one_bit = mutual_information(
        Ensemble({DensityMatrix::pure(up), DensityMatrix::pure(down)}, {0.5, 0.5}), z_basis);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    const double zero_bits = mutual_information(Ensemble({mixed, mixed}, {0.5, 0.5}), z_basis);

    const KrausChannel ch = two_pauli(0.5);
    const SignalPair pair = ansatz_states(optimal_entangled(0.5).alpha);
    const DensityMatrix r0 = ch.apply_two(pair.state0());
    const DensityMatrix r1 = ch.apply_two(pair.state1());
    const DiscriminationResult h = helstrom_error(r0, r1);
    // Verify the binary-symmetric structure before using 1 - H2(pe).
    const double err0 = (h.measurement.element(1) * r0.matrix()).trace().real();
    const double err1 = (h.measurement.element(0) * r1.matrix()).trace().real();
    const bool symmetric = close(err0, err1, 1e-9) && close(err0, h.pe, 1e-9);

    const double mi = mutual_information(Ensemble({r0, r1}, {0.5, 0.5}), h.measurement);
    const double target = 1.0 - oracles::binary_entropy_reference(0.241801);

    detail = "1 bit exact (" + fmt(one_bit) + "), 0 bits exact (" + fmt(zero_bits) +
             "), Helstrom MI " + fmt(mi) + " vs 1-H2(0.241801) = " + fmt(target);
    return std::abs(one_bit - 1.0) < 1e-12 && zero_bits == 0.0 && symmetric &&
           close(mi, target, 1e-6);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 table reproduction", 1.0, criterion_table},
        {"2 ansatz threshold", 1.0, criterion_threshold},
        {"3 closed forms vs brute force", 30.0, criterion_closed_forms},
        {"4 advantage regime", 10.0, criterion_advantage},
        {"5 optimizer concordance", 60.0, criterion_optimizers},
        {"6 commutation claims", 5.0, criterion_commutation},
        {"7 appendix dominance", 30.0, criterion_dominance},
        {"8 depolarizing null result", 60.0, criterion_depolarizing},
        {"9 amplitude-damping advantage", 60.0, criterion_amplitude_damping},
        {"10 monte carlo consistency", 30.0, criterion_monte_carlo},
        {"11 information layer", 5.0, criterion_information},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds < criterion.budget_seconds;
        if (!in_budget) detail += " [over budget]";
        const bool passed = ok && in_budget;
        std::printf("%s criterion %s (%.2fs): %s\n", passed ? "PASS" : "FAIL",
                    criterion.label.c_str(), seconds, detail.c_str());
        std::fflush(stdout);
        if (!passed) ++failures;
    }

    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
