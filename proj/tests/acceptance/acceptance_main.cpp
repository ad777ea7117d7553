// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Usage: wetbase_acceptance <1-8|all> [path-to-wetbase-cli]
// Prints one [PASS]/[FAIL] line per criterion; exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wetbase/benchmark.hpp"
#include "wetbase/comparators.hpp"
#include "wetbase/error.hpp"
#include "wetbase/estimator.hpp"
#include "wetbase/evaluation.hpp"
#include "wetbase/signal_model.hpp"
#include "wetbase/streaming.hpp"

using namespace wetbase;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr std::size_t kTrials = 55;
constexpr std::size_t kSamples = 9858;
constexpr double kNoisePower = 0.01;
constexpr double kZ95 = 1.96;
constexpr double kRuntimeLimitSeconds = 120.0;
constexpr double kOrderedFraction = 0.90;
constexpr double kCostRelTol = 1e-12;
constexpr double kWhittakerRelTol = 1e-8;
constexpr double kShiftTol = 1e-9;
constexpr double kLambda = 125577.0;
const std::vector<std::size_t> kScales{3, 5, 7, 10, 15, 20};
const std::vector<double> kThresholds{0.1, 0.5, 1.0, 2.0};

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(4);
    ss << v;
    return ss.str();
}

model::ModelParams base_model() {
    model::ModelParams p;
    p.n_samples = kSamples;
    p.noise_power = kNoisePower;
    return p;
}

eval::BenchmarkReport grid_report(double* seconds) {
    eval::BenchmarkGrid grid;
    grid.scales = kScales;
    grid.thresholds = kThresholds;
    eval::BenchmarkOptions o;
    o.n_trials = kTrials;
    o.run_comparators = false;
    const auto t0 = std::chrono::steady_clock::now();
    auto report = eval::benchmark(base_model(), grid, o);
    if (seconds != nullptr) {
        *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return report;
}

const eval::CellStats& cell(const eval::BenchmarkReport& r, std::size_t T, double c0) {
    for (const auto& c : r.cells) {
        if (c.scale_T == T && c.cost_threshold == c0) {
            return c;
        }
    }
    throw std::logic_error("missing cell");
}

Outcome ac1() {
    Outcome o;
    double seconds = 0.0;
    const auto report = grid_report(&seconds);
    std::size_t violations = 0;
    std::size_t pairs = 0;
    std::string first;
    for (std::size_t T : kScales) {
        for (std::size_t a = 0; a < kThresholds.size(); ++a) {
            for (std::size_t b = a + 1; b < kThresholds.size(); ++b) {
                const auto& lo = cell(report, T, kThresholds[a]);
                const auto& hi = cell(report, T, kThresholds[b]);
                const double n = static_cast<double>(kTrials);
                const double half_lo = kZ95 * lo.sd_mse_selected / std::sqrt(n);
                const double half_hi = kZ95 * hi.sd_mse_selected / std::sqrt(n);
                const bool decreases = hi.mean_mse_selected <= lo.mean_mse_selected;
                const bool overlap = hi.mean_mse_selected - half_hi <= lo.mean_mse_selected + half_lo;
                ++pairs;
                if (!decreases && !overlap) {
                    ++violations;
                    if (first.empty()) {
                        first = "T=" + std::to_string(T) + " C0 " + fmt(kThresholds[a]) + "->" + fmt(kThresholds[b]) +
                                ": " + fmt(lo.mean_mse_selected) + " -> " + fmt(hi.mean_mse_selected);
                    }
                }
            }
        }
    }
    if (violations > 0) {
        o.fail(std::to_string(violations) + "/" + std::to_string(pairs) +
               " C0 pairs increase beyond the 95% intervals, e.g. " + first);
    }
    if (seconds >= kRuntimeLimitSeconds) {
        o.fail("runtime " + fmt(seconds) + " s");
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " pairs consistent, runtime " + fmt(seconds) + " s";
    } else {
        o.detail += "; runtime " + fmt(seconds) + " s";
    }
    return o;
}

Outcome ac2() {
    Outcome o;
    const auto report = grid_report(nullptr);
    for (double c0 : kThresholds) {
        for (std::size_t k = 1; k < kScales.size(); ++k) {
            const double prev = cell(report, kScales[k - 1], c0).mean_anchors;
            const double next = cell(report, kScales[k], c0).mean_anchors;
            if (!(next < prev)) {
                o.fail("C0=" + fmt(c0) + ": |anchors| " + fmt(prev) + " at T=" + std::to_string(kScales[k - 1]) +
                       " vs " + fmt(next) + " at T=" + std::to_string(kScales[k]));
            }
        }
    }
    for (std::size_t T : kScales) {
        if (!(cell(report, T, 1.0).mean_anchors > cell(report, T, 0.1).mean_anchors)) {
            o.fail("T=" + std::to_string(T) + ": |anchors| does not increase from C0=0.1 to C0=1");
        }
        for (std::size_t k = 1; k < kThresholds.size(); ++k) {
            if (cell(report, T, kThresholds[k]).mean_anchors < cell(report, T, kThresholds[k - 1]).mean_anchors) {
                o.fail("T=" + std::to_string(T) + ": |anchors| drops at C0=" + fmt(kThresholds[k]));
            }
        }
    }
    if (o.pass) {
        o.detail = "T=3: " + fmt(cell(report, 3, 0.1).mean_anchors) + "/" + fmt(cell(report, 3, 1.0).mean_anchors) +
                   ", T=20: " + fmt(cell(report, 20, 0.1).mean_anchors) + "/" +
                   fmt(cell(report, 20, 1.0).mean_anchors) + " (C0=0.1/1)";
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    eval::BenchmarkOptions opt;
    opt.n_trials = kTrials;
    opt.run_grid = false;
    opt.proposed.scale_T = 5;
    opt.proposed.cost_threshold = 1.0;
    opt.airpls.lambda = kLambda;
    const auto report = eval::benchmark(base_model(), {}, opt);
    const auto& m = *report.comparison;
    const double fraction = static_cast<double>(m.trials_ordered) / static_cast<double>(kTrials);
    o.detail = "means " + fmt(m.mean_proposed) + " < " + fmt(m.mean_airpls) + " < " + fmt(m.mean_quantile) +
               ", ordered in " + std::to_string(m.trials_ordered) + "/" + std::to_string(kTrials);
    if (!(m.mean_proposed < m.mean_airpls && m.mean_airpls < m.mean_quantile)) {
        o.pass = false;
    }
    if (fraction < kOrderedFraction) {
        o.pass = false;
    }
    return o;
}

Outcome ac4() {
    Outcome o;
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<std::size_t> scale(1, 25);

    for (int k = 0; k < 1000; ++k) {
        const std::size_t T = scale(rng);
        const auto s = oracle::random_series(rng, 2 * T + 1 + k % 50);
        std::uniform_int_distribution<std::size_t> pos(T, s.size() - T - 1);
        const std::size_t t0 = pos(rng);
        const double expected = oracle::cost(s, t0, T);
        const double got = cost(s, t0, T);
        if (std::abs(got - expected) > kCostRelTol * std::max(std::abs(expected), 1e-300)) {
            o.fail("cost mismatch at case " + std::to_string(k));
        }
    }
    for (int k = 0; k < 100; ++k) {
        const std::size_t T = scale(rng);
        const auto s = k % 2 == 0 ? oracle::random_series(rng, 1000) : oracle::quantized_series(rng, 1000, 4);
        if (local_minima(s, T, TiePolicy::first) != oracle::local_minima(s, T, true) ||
            local_minima(s, T, TiePolicy::all) != oracle::local_minima(s, T, false)) {
            o.fail("local_minima mismatch on signal " + std::to_string(k));
        }
    }
    std::uniform_int_distribution<std::size_t> length(1, 500);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    int distance_cases = 0;
    while (distance_cases < 200) {
        const std::size_t n = length(rng);
        std::vector<double> s(n), b(n), b_hat(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = g(rng);
            b_hat[i] = b[i] + 0.8 * g(rng);
            s[i] = b[i] + u(rng);
        }
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        const auto expected = oracle::distances(s, b, b_hat, 5.0, all);
        if (expected.front() == std::numeric_limits<std::size_t>::max()) {
            continue;
        }
        ++distance_cases;
        if (eval::distance_to_wet(s, b, b_hat, 5.0, all).distances != expected) {
            o.fail("d(i) mismatch at N=" + std::to_string(n));
        }
    }
    std::uniform_int_distribution<std::size_t> small(4, 50);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    // Up to 1e6: beyond that the system itself is too ill-conditioned for 1e-8 in double.
    std::uniform_real_distribution<double> log_lambda(-2.0, 6.0);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = small(rng);
        const int order = 1 + k % 2;
        const auto y = oracle::random_series(rng, n);
        std::vector<double> w(n);
        for (double& x : w) {
            x = weight(rng) < 0.3 ? 0.0 : weight(rng);
        }
        w[0] = std::max(w[0], 0.5);
        w[n - 1] = std::max(w[n - 1], 0.5);
        const double lambda = k % 4 == 0 ? kLambda : std::pow(10.0, log_lambda(rng));
        const auto banded = comparators::whittaker_smooth(y, w, lambda, order);
        const auto dense = oracle::whittaker_dense(y, w, lambda, order);
        double scale_y = 0.0;
        for (double v : dense) {
            scale_y = std::max(scale_y, std::abs(v));
        }
        if (oracle::max_abs_diff(banded, dense) > kWhittakerRelTol * std::max(scale_y, 1.0)) {
            o.fail("whittaker mismatch at N=" + std::to_string(n));
        }
    }
    if (o.pass) {
        o.detail = "1000 cost, 100 local_minima, 200 d(i), 200 banded-solve cases";
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    const std::size_t scales[] = {3, 10, 20};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        model::ModelParams p = base_model();
        p.seed = 5000 + seed;
        const auto scene = model::generate_scene(p);
        EstimatorConfig cfg;
        cfg.scale_T = scales[seed % 3];
        const auto batch = estimate(scene.s, cfg);
        StreamingEstimator stream(cfg);
        const std::size_t bound = 2 * cfg.scale_T + cfg.smooth_len + 1;
        if (stream.buffer_capacity() > bound) {
            o.fail("capacity " + std::to_string(stream.buffer_capacity()) + " > " + std::to_string(bound));
        }
        std::vector<Anchor> anchors;
        const auto take = [&](const StreamEmission& e) {
            if (e.anchor) {
                anchors.push_back(*e.anchor);
            }
        };
        for (double v : scene.s.values()) {
            if (auto e = stream.push(v)) {
                take(*e);
            }
            if (stream.buffer_occupancy() > bound) {
                o.fail("occupancy exceeded on seed " + std::to_string(p.seed));
            }
        }
        for (const auto& e : stream.finish()) {
            take(e);
        }
        if (anchors != batch.anchors) {
            o.fail("anchor mismatch on seed " + std::to_string(p.seed) + " (T=" + std::to_string(cfg.scale_T) + ")");
        }
    }
    if (o.pass) {
        o.detail = "100 scenes identical, occupancy <= 2T+L+1";
    }
    return o;
}

Outcome ac6() {
    Outcome o;
    std::mt19937_64 rng(606);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 50 + static_cast<std::size_t>(k);
        std::vector<double> s(n), b(n), b_hat(n), above(n), below(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = g(rng);
            b_hat[i] = b[i] + 0.8 * g(rng);
            s[i] = b[i] + u(rng);
            above[i] = b[i] + std::abs(b_hat[i] - b[i]);
            below[i] = b[i] - std::abs(b_hat[i] - b[i]);
        }
        const auto sets = eval::fa_md_sets(s, b, b_hat, 5.0);
        std::vector<std::size_t> both;
        std::set_intersection(sets.false_alarms.begin(), sets.false_alarms.end(), sets.missed_detections.begin(),
                              sets.missed_detections.end(), std::back_inserter(both));
        if (!both.empty()) {
            o.fail("FA and MD intersect");
        }
        if (!eval::fa_md_sets(s, b, above, 5.0).false_alarms.empty()) {
            o.fail("b_hat >= b produced a false alarm");
        }
        if (!eval::fa_md_sets(s, b, below, 5.0).missed_detections.empty()) {
            o.fail("b_hat <= b produced a missed detection");
        }
    }

    const double shifts[] = {-40.0, 3.25, 250.0};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        model::ModelParams p = base_model();
        p.seed = 6000 + seed;
        const auto scene = model::generate_scene(p);
        const auto est = estimate(scene.s, {});
        const auto report = eval::evaluate(scene, est, 5.0);
        const double c = shifts[seed % 3];
        std::vector<double> s2 = scene.s.samples();
        std::vector<double> b2 = scene.b.samples();
        for (std::size_t i = 0; i < s2.size(); ++i) {
            s2[i] += c;
            b2[i] += c;
        }
        model::SyntheticScene moved = scene;
        moved.s = Signal(s2, scene.s.sample_period());
        moved.b = Signal(b2, scene.b.sample_period());
        const auto est2 = estimate(moved.s, {});
        double worst = 0.0;
        for (std::size_t i = 0; i < s2.size(); ++i) {
            worst = std::max(worst, std::abs(est2.baseline[i] - est.baseline[i] - c));
        }
        if (worst > kShiftTol) {
            o.fail("estimate not shift-equivariant: " + fmt(worst));
        }
        const auto report2 = eval::evaluate(moved, est2, 5.0);
        const double diffs[] = {report2.mse_selected - report.mse_selected, report2.mse_full - report.mse_full,
                                report2.p_fa - report.p_fa, report2.p_md - report.p_md};
        for (double d : diffs) {
            if (std::abs(d) > kShiftTol) {
                o.fail("metric changed under shift by " + fmt(d));
            }
        }
        if (report2.d_histogram.size() != report.d_histogram.size()) {
            o.fail("d histogram changed under shift");
        } else {
            for (auto it = report.d_histogram.begin(), jt = report2.d_histogram.begin(); it != report.d_histogram.end();
                 ++it, ++jt) {
                if (it->first != jt->first || std::abs(it->second - jt->second) > kShiftTol) {
                    o.fail("d histogram changed under shift");
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "1000 fuzzed FA/MD cases, 30 shifted scenes";
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    const EstimatorConfig cfg{};
    std::size_t passed = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        model::ModelParams p = base_model().without_peaks();
        p.noise_power = 0.0;
        p.seed = 7000 + seed;
        const auto scene = model::generate_scene(p);
        const auto est = estimate(scene.s, cfg);
        double err = 0.0;
        for (std::size_t i = 0; i < scene.b.size(); ++i) {
            err = std::max(err, std::abs(est.baseline[i] - scene.b[i]));
        }
        worst = std::max(worst, err);
        passed += err <= p.walk_step * static_cast<double>(cfg.scale_T) ? 1 : 0;
    }
    const double bound = model::ModelParams{}.walk_step * static_cast<double>(cfg.scale_T);
    o.pass = passed == 100;
    o.detail = std::to_string(passed) + "/100 seeds within " + fmt(bound) + " (T=" + std::to_string(cfg.scale_T) +
               "), worst max|b_hat-b| " + fmt(worst);
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac8(const std::string& cli) {
    Outcome o;
    if (cli.empty()) {
        o.fail("no CLI path given");
        return o;
    }
    const fs::path dir = fs::temp_directory_path() / ("wetbase_ac8_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    const std::string scene = (dir / "scene.csv").string();
    const std::vector<std::pair<std::string, std::string>> commands{
        {"generate", "--seed 11"},
        {"generate", "--seed 11 --format json"},
        {"estimate", "--input " + scene},
        {"estimate", "--seed 11 --format json"},
        {"benchmark", "--seed 11 --trials 20"},
        {"benchmark", "--seed 11 --trials 20 --format json"},
        {"compare", "--seed 11"},
        {"compare", "--seed 11 --format json"},
    };
    const std::string prep = "\"" + cli + "\" --command generate --seed 11 --output \"" + scene + "\" > /dev/null";
    if (std::system(prep.c_str()) != 0) {
        o.fail("could not generate the input scene");
    }
    int k = 0;
    for (const auto& [name, args] : commands) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = dir / (std::to_string(k) + "_" + std::to_string(run));
            const std::string cmd =
                "\"" + cli + "\" --command " + name + " " + args + " --output \"" + out.string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0) {
                o.fail(name + " " + args + " exited non-zero");
            }
            outputs[run] = slurp(out);
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) {
            o.fail(name + " " + args + " differs between runs");
        }
        ++k;
    }
    fs::remove_all(dir);
    if (o.pass) {
        o.detail = std::to_string(commands.size()) + " invocations byte-identical";
    }
    return o;
}

const char* const kNames[] = {
    "",
    "mean anchor MSE non-increasing in C0",
    "anchor count decreases with T and increases with C0",
    "proposed < airPLS < quantile regression full MSE",
    "oracle equivalences",
    "batch/stream equivalence and memory bound",
    "metric properties and shift invariance",
    "noise-free tracking bound max|b_hat-b| <= walk_step*T",
    "CLI determinism",
};

bool report(int id, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << kNames[id] << " -- " << o.detail
              << std::endl;
    return o.pass;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <1-8|all> [wetbase-cli]\n";
        return 2;
    }
    const std::string which = argv[1];
    const std::string cli = argc > 2 ? argv[2] : "";
    const std::vector<std::function<Outcome()>> checks{
        ac1, ac2, ac3, ac4, ac5, ac6, ac7, [&] { return ac8(cli); },
    };
    bool all_pass = true;
    for (int id = 1; id <= 8; ++id) {
        if (which == "all" || which == std::to_string(id)) {
            all_pass = report(id, checks[static_cast<std::size_t>(id - 1)]) && all_pass;
        }
    }
    return all_pass ? 0 : 1;
}
