/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdiscrim/channel.hpp"
#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/info_theory.hpp"
#include "qdiscrim/montecarlo.hpp"
#include "qdiscrim/optimizer.hpp"
#include "qdiscrim/parallel.hpp"

namespace qdiscrim::cli {

inline constexpr const char* kVersion = "0.1.0";

//=========================================================================
// Run configuration
//=========================================================================

struct RunConfig {
    std::string channel_spec = "two_pauli";  // builtin name or JSON path
    double x = 0.5;                          // channel parameter for builtins
    bool has_grid = false;
    double grid_start = 0.0;
    double grid_stop = 0.0;
    int grid_steps = 0;
    std::uint64_t seed = 42;
    int restarts = 32;
    std::uint64_t trials = 1000000;
    bool quick = false;
    bool paper = false;
    int workers = 0;  // 0: machine parallelism
};

/// Seed resolution: the --seed flag wins; otherwise QDISCRIM_SEED;
/// otherwise 42.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("QDISCRIM_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return 42;
}

//=========================================================================
// Formatting (CSV schema: 6 fixed decimals plus a full-precision column)
//=========================================================================

inline std::string fmt6(double v) {
    if (v < 0.0 && v > -5e-7) v = 0.0;  // avoid printing "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

//=========================================================================
// Channel and grid resolution
//=========================================================================

inline bool is_builtin_channel(const std::string& name) {
    return name == "two_pauli" || name == "amplitude_damping" || name == "depolarizing" ||
           name == "dephasing";
}

inline KrausChannel make_channel(const std::string& spec, double param) {
    if (spec == "two_pauli") return two_pauli(param);
    if (spec == "amplitude_damping") return amplitude_damping(param);
    if (spec == "depolarizing") return depolarizing(param);
    if (spec == "dephasing") return dephasing(param);
    return load_channel(spec);
}

/// Grid points for a sweep. The default is the 99 interior hundredths of
/// (0, 1); an explicit grid is inclusive of both ends.
inline std::vector<double> grid_points(const RunConfig& config) {
    double start = 0.01, stop = 0.99;
    int steps = 99;
    if (config.has_grid) {
        start = config.grid_start;
        stop = config.grid_stop;
        steps = config.grid_steps;
    }
    if (steps < 1) throw InvalidGrid("grid needs at least one point");
    if (!(start >= 0.0 && start <= stop && stop <= 1.0))
        throw InvalidGrid("grid must satisfy 0 <= start <= stop <= 1");
    std::vector<double> xs(steps);
    if (steps == 1) {
        xs[0] = start;
    } else {
        for (int k = 0; k < steps; ++k)
            xs[k] = start + (stop - start) * static_cast<double>(k) / (steps - 1);
    }
    return xs;
}

/// Best ansatz error probability at x, by golden section over the
/// quarter-period on which P_e(alpha) is unimodal.
inline double ansatz_minimum_pe(double x) {
    return golden_section_min([x](double a) { return ansatz_pe(a, x); }, 0.0,
                              0.25 * 3.14159265358979323846, 1e-10)
        .second;
}

//=========================================================================
// table: the representative two-Pauli points
//=========================================================================

inline int cmd_table(const RunConfig& config, std::ostream& out) {
    std::ostringstream csv;
    csv << "x,pe_product,pe_entangled,advantage";
    if (config.paper) csv << ",published_product,published_entangled";
    csv << ",pe_product_full,pe_entangled_full,note\n";

    for (const TableRow& row : published_table()) {
        const double product = product_baseline_pe(row.x);
        const double entangled = optimal_entangled(row.x).pe;
        csv << fmt6(row.x) << ',' << fmt6(product) << ',' << fmt6(entangled) << ','
            << fmt6(product - entangled);
        if (config.paper)
            csv << ',' << fmt6(row.published_product) << ',' << fmt6(row.published_entangled);
        csv << ',' << fmt_full(product) << ',' << fmt_full(entangled) << ',';
        if (row.product_misprint)
            csv << "published product value 0.010000 is a misprint; the piecewise formula gives "
                << fmt6(product);
        csv << '\n';
    }
    out << csv.str();
    return 0;
}

//=========================================================================
// sweep: product / ansatz / numeric-search error rates over a grid
//=========================================================================

inline int cmd_sweep(const RunConfig& config, std::ostream& out) {
    const std::vector<double> xs = grid_points(config);
    const bool is_two_pauli = config.channel_spec == "two_pauli";
    const double threshold = ansatz_threshold();
    const int restarts = config.quick ? std::max(2, config.restarts / 8) : config.restarts;

    struct Row {
        double x, product, ansatz, search;
        bool has_ansatz;
    };
    std::vector<Row> rows(xs.size());

    parallel_for(xs.size(), config.workers, [&](std::size_t i) {
        const double x = xs[i];
        Row& row = rows[i];
        row.x = x;
        const KrausChannel channel = make_channel(config.channel_spec, x);
        if (is_two_pauli) {
            row.product = product_baseline_pe(x);
            row.ansatz = ansatz_minimum_pe(x);
            row.has_ansatz = true;
        } else {
            row.product =
                search_product_inputs(channel, std::max(2, restarts / 4), config.seed).best_pe;
            row.ansatz = 0.0;
            row.has_ansatz = false;
        }
        row.search = seesaw(channel, config.seed, 200, restarts).best_pe;
    });

    std::ostringstream csv;
    csv << "# qdiscrim " << kVersion << "\n";
    csv << "# command=sweep channel=" << config.channel_spec << " seed=" << config.seed
        << " restarts=" << restarts << "\n";
    csv << "x,pe_product,pe_ansatz,pe_search,advantage,entangled_beats_product,"
           "above_ansatz_threshold,pe_product_full,pe_ansatz_full,pe_search_full\n";
    for (const Row& row : rows) {
        const double advantage = row.product - row.search;
        csv << fmt6(row.x) << ',' << fmt6(row.product) << ','
            << (row.has_ansatz ? fmt6(row.ansatz) : std::string{}) << ',' << fmt6(row.search)
            << ',' << fmt6(advantage) << ',' << (advantage > 1e-7 ? 1 : 0) << ','
            << (is_two_pauli ? std::string(row.x >= threshold ? "1" : "0") : std::string{})
            << ',' << fmt_full(row.product) << ','
            << (row.has_ansatz ? fmt_full(row.ansatz) : std::string{}) << ','
            << fmt_full(row.search) << '\n';
    }
    out << csv.str();
    return 0;
}

//=========================================================================
// verify: the property battery
//=========================================================================

namespace detail {

struct Check {
    std::string name;
    bool passed;
    std::string metric;
};

inline void report_checks(const std::vector<Check>& checks, std::ostream& human,
                          std::ostream& csv) {
    csv << "check,status,metric\n";
    for (const auto& c : checks) {
        human << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.metric << ")\n";
        std::string metric = c.metric;  // keep the metric a single CSV field
        for (char& ch : metric)
            if (ch == ',' || ch == '\n') ch = ';';
        csv << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << metric << '\n';
    }
}

}  // namespace detail

inline int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream* csv_out = nullptr) {
    std::vector<detail::Check> checks;
    auto add = [&](std::string name, bool ok, std::string metric) {
        checks.push_back({std::move(name), ok, std::move(metric)});
    };
    const std::uint64_t seed = config.seed;
    const bool quick = config.quick;

    // Completeness of the built-in families, or of a user channel file.
    if (is_builtin_channel(config.channel_spec)) {
        double worst = 0.0;
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            worst = std::max(worst, two_pauli(p).completeness_residual());
            worst = std::max(worst, amplitude_damping(p).completeness_residual());
            worst = std::max(worst, depolarizing(p).completeness_residual());
            worst = std::max(worst, dephasing(p).completeness_residual());
        }
        add("channel_completeness", worst <= 1e-9, "max residual " + fmt_full(worst));
    } else {
        try {
            const KrausChannel ch = load_channel(config.channel_spec);
            add("channel_completeness", true,
                "residual " + fmt_full(ch.completeness_residual()));
        } catch (const ChannelFormatError& e) {
            add("channel_completeness", false, e.what());
        }
    }

    // Orthogonal inputs whose two-use outputs do not commute.
    {
        const double norm = commutation_probe(noncommuting_example_pair(), 0.5);
        add("counterexample_noncommuting", norm > 1e-6, "commutator norm " + fmt_full(norm));
    }

    // Rotations of two Bell states always commute after the channel.
    {
        CounterRng rng = CounterRng(seed).stream(1);
        double worst = 0.0;
        const int cases = quick ? 10 : 50;
        for (int k = 0; k < cases; ++k) {
            const std::size_t b1 = rng.index(4);
            std::size_t b2 = rng.index(3);
            if (b2 >= b1) ++b2;
            const double alpha = rng.uniform() * 2.0 * 3.14159265358979323846;
            const double x = rng.uniform();
            worst = std::max(worst, commutation_probe(bell_plane_pair(b1, b2, alpha), x));
        }
        add("bell_plane_commuting", worst < 1e-10, "worst commutator " + fmt_full(worst));
    }

    // The cross-plane family commutes only at x in {0, 1/3, 1}.
    {
        CounterRng rng = CounterRng(seed).stream(2);
        bool ok = true;
        double commuting_worst = 0.0, noncommuting_best = 1.0;
        const std::vector<double> grid = {0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5,
                                          0.6, 0.7, 0.8, 0.9, 1.0};
        for (double x : grid) {
            const double a = 0.3 + 0.9 * rng.uniform();  // stay away from Bell states
            const double b = 0.3 + 0.9 * rng.uniform();
            const double norm = commutation_probe(cross_plane_pair(a, b), x);
            const bool expect_commute = x == 0.0 || x == 1.0 || std::abs(x - 1.0 / 3.0) < 1e-15;
            if (expect_commute) {
                commuting_worst = std::max(commuting_worst, norm);
                ok = ok && norm < 1e-10;
            } else {
                noncommuting_best = std::min(noncommuting_best, norm);
                ok = ok && norm > 1e-8;
            }
        }
        add("cross_plane_commutation", ok,
            "commuting max " + fmt_full(commuting_worst) + ", noncommuting min " +
                fmt_full(noncommuting_best));
    }

    // Closed-form Bell-basis output matrix against the brute-force path.
    {
        CounterRng rng = CounterRng(seed).stream(3);
        double worst = 0.0;
        const int cases = quick ? 40 : 200;
        for (int k = 0; k < cases; ++k) {
            double c[4];
            double norm2 = 0.0;
            for (double& v : c) {
                v = rng.gaussian();
                norm2 += v * v;
            }
            for (double& v : c) v /= std::sqrt(norm2);
            const BellCoefficients coeffs{c[0], c[1], c[2], c[3]};
            const double x = rng.uniform();
            const DensityMatrix closed = two_pauli_output_bell(coeffs, x);
            const DensityMatrix brute =
                two_pauli(x).apply_two(DensityMatrix::pure(bell_to_computational(coeffs)));
            worst = std::max(worst,
                             max_abs_diff(closed.matrix(), to_bell_basis(brute.matrix())));
        }
        add("bell_matrix_closed_form", worst < 1e-10, "worst deviation " + fmt_full(worst));
    }

    // Ansatz error formula against the Helstrom error of the outputs.
    {
        double worst = 0.0;
        const int na = quick ? 12 : 40, nx = quick ? 12 : 40;
        for (int ia = 0; ia < na; ++ia) {
            const double alpha = 3.14159265358979323846 * ia / (na - 1);
            for (int ix = 0; ix < nx; ++ix) {
                const double x = static_cast<double>(ix) / (nx - 1);
                const SignalPair pair = ansatz_states(alpha);
                const KrausChannel ch = two_pauli(x);
                const double brute =
                    helstrom_error(ch.apply_two(pair.state0()), ch.apply_two(pair.state1())).pe;
                worst = std::max(worst, std::abs(ansatz_pe(alpha, x) - brute));
            }
        }
        add("ansatz_formula_vs_brute_force", worst < 1e-10, "worst deviation " + fmt_full(worst));
    }

    // Threshold value and validity-boundary residual.
    {
        const double xstar = ansatz_threshold();
        const double residual = std::abs(ansatz_boundary_residual(xstar));
        const bool ok = std::abs(xstar - 0.227539) < 1e-6 && residual < 1e-9;
        add("ansatz_threshold", ok,
            "x* " + fmt_full(xstar) + ", boundary residual " + fmt_full(residual));
    }

    // Entanglement advantage exactly on (1/3, 1).
    {
        bool ok = true;
        const int n = quick ? 33 : 99;
        double min_gain = 1.0;
        for (int k = 1; k <= n; ++k) {
            const double x = static_cast<double>(k) / (n + 1);
            const double product = product_baseline_pe(x);
            const double best_ansatz = ansatz_minimum_pe(x);
            if (x > 1.0 / 3.0 + 1e-12) {
                const double entangled = optimal_entangled(x).pe;
                ok = ok && entangled < product;
                min_gain = std::min(min_gain, product - entangled);
            } else {
                ok = ok && best_ansatz >= product - 1e-9;
            }
        }
        add("advantage_regime", ok, "min gain above 1/3: " + fmt_full(min_gain));
    }

    // Helstrom error never exceeds any tested POVM's error.
    {
        CounterRng rng = CounterRng(seed).stream(4);
        bool ok = true;
        double worst_slack = 0.0;
        const int cases = quick ? 20 : 100;
        for (int k = 0; k < cases; ++k) {
            const std::size_t d = k % 2 == 0 ? 2 : 4;
            const DensityMatrix r0 = random_density(d, rng);
            const DensityMatrix r1 = random_density(d, rng);
            const double h = helstrom_error(r0, r1).pe;

            const ComplexMatrix u = random_unitary(d, rng);
            std::vector<ComplexMatrix> projective;
            for (std::size_t c = 0; c < d; ++c) {
                Vec col(d);
                for (std::size_t i = 0; i < d; ++i) col[i] = u(i, c);
                projective.push_back(outer(col));
            }
            const double pp = povm_error(Povm(projective), r0, r1);

            // Random three-element POVM: normalize Wishart draws.
            std::vector<ComplexMatrix> raw;
            ComplexMatrix total(d, d);
            for (int e = 0; e < 3; ++e) {
                const DensityMatrix w = random_density(d, rng);
                raw.push_back(w.matrix());
                total += w.matrix();
            }
            const Spectrum ts = hermitian_eig(total);
            ComplexMatrix isqrt(d, d);
            for (std::size_t i = 0; i < d; ++i)
                isqrt += outer(spectrum_column(ts, i)) *
                         Complex(1.0 / std::sqrt(ts.eigenvalues[i]), 0.0);
            std::vector<ComplexMatrix> threel;
            for (const auto& e : raw) threel.push_back(isqrt * e * isqrt);
            const double p3 = povm_error(Povm(threel), r0, r1);

            worst_slack = std::max(worst_slack, std::max(h - pp, h - p3));
            ok = ok && h <= pp + 1e-12 && h <= p3 + 1e-12;
        }
        add("helstrom_optimality", ok, "worst slack " + fmt_full(worst_slack));
    }

    // Random mixed/nonorthogonal inputs never beat the orthogonal optimum.
    {
        const std::size_t samples = quick ? 50 : 500;
        const DominanceReport r1 = dominance_check(two_pauli(0.5), samples, seed);
        const DominanceReport r2 = dominance_check(amplitude_damping(0.6), samples, seed);
        const bool ok = r1.violations == 0 && r2.violations == 0;
        add("appendix_dominance", ok,
            "worst margins " + fmt_full(r1.worst_margin) + " / " + fmt_full(r2.worst_margin));
    }

    // No entanglement benefit on the depolarizing channel.
    {
        bool ok = true;
        double worst = 0.0;
        const std::vector<double> ps =
            quick ? std::vector<double>{0.3, 0.6, 0.9}
                  : std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        const int restarts = quick ? 8 : config.restarts;
        for (double p : ps) {
            const KrausChannel ch = depolarizing(p);
            const double product = search_product_inputs(ch, 8, seed).best_pe;
            const double entangled = seesaw(ch, seed, 200, restarts).best_pe;
            worst = std::max(worst, std::abs(product - entangled));
            ok = ok && std::abs(product - entangled) < 1e-6;
        }
        add("depolarizing_no_benefit", ok, "worst gap " + fmt_full(worst));
    }

    std::ostringstream csv;
    detail::report_checks(checks, out, csv);
    if (csv_out) (*csv_out) << csv.str();

    for (const auto& c : checks)
        if (!c.passed) return 1;
    return 0;
}

//=========================================================================
// optimize: numeric searches against the closed forms
//=========================================================================

inline int cmd_optimize(const RunConfig& config, std::ostream& out) {
    const std::vector<double> xs =
        config.has_grid ? grid_points(config) : std::vector<double>{config.x};
    const bool is_two_pauli = config.channel_spec == "two_pauli";
    const int restarts = config.quick ? std::max(2, config.restarts / 8) : config.restarts;

    struct Row {
        double x;
        double search, seesaw_pe, product;
        double analytic;
        bool has_analytic;
    };
    std::vector<Row> rows(xs.size());

    // One grid point parallelizes across restarts; many points
    // parallelize across the grid instead.
    const int search_workers = xs.size() == 1 ? config.workers : 1;
    parallel_for(xs.size(), config.workers, [&](std::size_t i) {
        const double x = xs[i];
        Row& row = rows[i];
        row.x = x;
        const KrausChannel channel = make_channel(config.channel_spec, x);
        row.search = search_optimal_inputs(channel, restarts, config.seed,
                                           config.quick ? 600 : 2000, search_workers)
                         .best_pe;
        row.seesaw_pe = seesaw(channel, config.seed, 200, restarts).best_pe;
        if (is_two_pauli) {
            row.product = product_baseline_pe(x);
            row.analytic = x > 1.0 / 3.0 ? optimal_entangled(x).pe : product_baseline_pe(x);
            row.has_analytic = true;
        } else {
            row.product = search_product_inputs(channel, 8, config.seed).best_pe;
            row.analytic = 0.0;
            row.has_analytic = false;
        }
    });

    std::ostringstream csv;
    csv << "# qdiscrim " << kVersion << "\n";
    csv << "# command=optimize channel=" << config.channel_spec << " seed=" << config.seed
        << " restarts=" << restarts << "\n";
    csv << "x,pe_search,pe_seesaw,pe_product,pe_analytic,advantage,"
           "pe_search_full,pe_seesaw_full,pe_product_full,pe_analytic_full\n";
    for (const Row& row : rows) {
        const double best = std::min(row.search, row.seesaw_pe);
        csv << fmt6(row.x) << ',' << fmt6(row.search) << ',' << fmt6(row.seesaw_pe) << ','
            << fmt6(row.product) << ',' << (row.has_analytic ? fmt6(row.analytic) : std::string{})
            << ',' << fmt6(row.product - best) << ',' << fmt_full(row.search) << ','
            << fmt_full(row.seesaw_pe) << ',' << fmt_full(row.product) << ','
            << (row.has_analytic ? fmt_full(row.analytic) : std::string{}) << '\n';
    }
    out << csv.str();
    return 0;
}

//=========================================================================
// mc: Monte Carlo error-rate estimates
//=========================================================================

inline int cmd_mc(const RunConfig& config, std::ostream& out) {
    const std::vector<double> xs =
        config.has_grid ? grid_points(config) : std::vector<double>{config.x};
    const bool is_two_pauli = config.channel_spec == "two_pauli";
    const std::uint64_t trials = config.quick ? std::min<std::uint64_t>(config.trials, 20000)
                                              : config.trials;

    std::ostringstream csv;
    csv << "# qdiscrim " << kVersion << "\n";
    csv << "# command=mc channel=" << config.channel_spec << " seed=" << config.seed
        << " trials=" << trials << "\n";
    csv << "x,pair,trials,empirical_pe,standard_error,analytic_pe,deviation_se,within_4se,"
           "empirical_pe_full,analytic_pe_full\n";

    const double s2 = std::sqrt(0.5);
    for (double x : xs) {
        const KrausChannel channel = make_channel(config.channel_spec, x);

        std::vector<std::pair<std::string, SignalPair>> pairs;
        if (is_two_pauli) {
            const Vec plus{s2, s2}, minus{s2, -s2}, up{1.0, 0.0}, down{0.0, 1.0};
            if (x >= 1.0 / 3.0)
                pairs.emplace_back("product_baseline",
                                   SignalPair::pure(kron(plus, plus), kron(minus, minus)));
            else
                pairs.emplace_back("product_baseline",
                                   SignalPair::pure(kron(up, up), kron(down, down)));
            if (x >= ansatz_threshold())
                pairs.emplace_back("entangled_optimal",
                                   ansatz_states(optimal_entangled(x).alpha));
        } else {
            pairs.emplace_back("product_search",
                               search_product_inputs(channel, 8, config.seed).best_pair);
            pairs.emplace_back("entangled_search",
                               seesaw(channel, config.seed, 200,
                                      config.quick ? 8 : config.restarts)
                                   .best_pair);
        }

        for (const auto& [label, pair] : pairs) {
            const double analytic =
                helstrom_error(channel.apply_two(pair.state0()), channel.apply_two(pair.state1()),
                               pair.prior0(), pair.prior1())
                    .pe;
            const McEstimate est =
                simulate_error_rate(pair, channel, trials, config.seed, config.workers);
            const double dev = est.standard_error > 0.0
                                   ? std::abs(est.empirical_pe - analytic) / est.standard_error
                                   : 0.0;
            csv << fmt6(x) << ',' << label << ',' << trials << ',' << fmt6(est.empirical_pe)
                << ',' << fmt_full(est.standard_error) << ',' << fmt6(analytic) << ','
                << fmt6(dev) << ',' << (dev <= 4.0 ? 1 : 0) << ','
                << fmt_full(est.empirical_pe) << ',' << fmt_full(analytic) << '\n';
        }
    }
    out << csv.str();
    return 0;
}

//=========================================================================
// info: mutual information and capacity lower bounds
//=========================================================================

inline int cmd_info(const RunConfig& config, std::ostream& out) {
    const KrausChannel channel = make_channel(config.channel_spec, config.x);
    const int budget = config.quick ? 2 : std::max(2, config.restarts / 4);

    // The best discrimination pair carries the headline numbers.
    const SignalPair pair = [&] {
        if (config.channel_spec == "two_pauli" && config.x >= ansatz_threshold())
            return ansatz_states(optimal_entangled(config.x).alpha);
        return seesaw(channel, config.seed, 200, budget * 4).best_pair;
    }();
    const DensityMatrix out0 = channel.apply_two(pair.state0());
    const DensityMatrix out1 = channel.apply_two(pair.state1());
    const DiscriminationResult helstrom = helstrom_error(out0, out1);

    const Ensemble ensemble({out0, out1}, {0.5, 0.5});
    const double mi = mutual_information(ensemble, helstrom.measurement);
    const CapacityResult cap = capacity_fixed_outputs({out0, out1}, budget, 10, config.seed);
    const TwoUseReport uses = two_use_vs_single_use(channel, budget, config.seed);

    std::ostringstream csv;
    csv << "# qdiscrim " << kVersion << "\n";
    csv << "# command=info channel=" << config.channel_spec << " x=" << fmt6(config.x)
        << " seed=" << config.seed << " budget=" << budget << "\n";
    csv << "metric,value,flag,value_full\n";
    csv << "helstrom_pe," << fmt6(helstrom.pe) << ",exact," << fmt_full(helstrom.pe) << '\n';
    csv << "mutual_information_helstrom," << fmt6(mi) << ",exact_for_pair," << fmt_full(mi)
        << '\n';
    csv << "capacity_two_outputs," << fmt6(cap.bits) << ",lower_bound," << fmt_full(cap.bits)
        << '\n';
    csv << "single_use_capacity," << fmt6(uses.single_use_bits) << ",lower_bound,"
        << fmt_full(uses.single_use_bits) << '\n';
    csv << "two_use_capacity," << fmt6(uses.two_use_bits) << ",lower_bound,"
        << fmt_full(uses.two_use_bits) << '\n';
    csv << "capacity_ratio," << fmt6(uses.ratio) << ",lower_bound," << fmt_full(uses.ratio)
        << '\n';
    out << csv.str();
    return 0;
}

}  // namespace qdiscrim::cli
