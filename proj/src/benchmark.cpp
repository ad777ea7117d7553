// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "wetbase/error.hpp"
#include "wetbase/evaluation.hpp"

namespace wetbase::eval {

namespace {

struct TrialResult {
    std::vector<TrialMetrics> cells;
    double proposed = std::numeric_limits<double>::quiet_NaN();
    double airpls = 0.0;
    double quantile = 0.0;
    bool quantile_converged = true;
};

TrialMetrics run_cell(const model::SyntheticScene& scene, const EstimatorConfig& config, double threshold_S) {
    TrialMetrics m;
    const auto smoothed = smooth(scene.s.values(), config.smooth_len);
    const auto anchors = select_anchors(smoothed, config);
    m.n_anchors = anchors.size();
    if (anchors.empty()) {
        m.failed = true;
        return m;
    }
    const auto baseline = interpolate(anchors, scene.s.size(), config.edge_policy);
    m.mse_selected = mse_selected(anchors, scene.b.values());
    m.mse_full = mse_full(baseline, scene.b.values());
    const auto sets = fa_md_sets(scene.s.values(), scene.b.values(), baseline, threshold_S);
    m.p_fa = sets.p_fa;
    m.p_md = sets.p_md;
    return m;
}

TrialResult run_trial(const model::ModelParams& base, std::size_t trial, const BenchmarkGrid& grid,
                      const BenchmarkOptions& options) {
    model::ModelParams params = base;
    params.seed = base.seed + trial;
    const auto scene = model::generate_scene(params);

    TrialResult result;
    if (options.run_grid) {
        for (std::size_t T : grid.scales) {
            for (double c0 : grid.thresholds) {
                EstimatorConfig config = options.proposed;
                config.scale_T = T;
                config.cost_threshold = c0;
                config.smooth_len = grid.smooth_len;
                result.cells.push_back(run_cell(scene, config, options.threshold_S));
            }
        }
    }
    if (options.run_comparators) {
        const TrialMetrics proposed = run_cell(scene, options.proposed, options.threshold_S);
        if (!proposed.failed) {
            result.proposed = proposed.mse_full;
        }
        result.airpls = mse_full(comparators::airpls(scene.s.values(), options.airpls), scene.b.values());
        const auto q = comparators::quantile_poly(scene.s.values(), options.quantile);
        result.quantile = mse_full(q.fit, scene.b.values());
        result.quantile_converged = q.converged;
    }
    return result;
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double x : v) {
        if (!std::isnan(x)) {
            sum += x;
            ++count;
        }
    }
    return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(count);
}

} // namespace

BenchmarkReport benchmark(const model::ModelParams& params, const BenchmarkGrid& grid,
                          const BenchmarkOptions& options) {
    params.validate();
    options.proposed.validate();
    if (options.n_trials < 1) {
        throw Error(ErrorCode::invalid_params, "evaluation", "benchmark needs at least one trial");
    }
    for (std::size_t T : grid.scales) {
        for (double c0 : grid.thresholds) {
            EstimatorConfig{T, c0, grid.smooth_len}.validate();
        }
    }

    std::vector<TrialResult> trials(options.n_trials);
    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, options.n_trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < options.n_trials; k = next++) {
            try {
                trials[k] = run_trial(params, k, grid, options);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    BenchmarkReport report{params, grid, options, {}, std::nullopt};
    if (options.run_grid) {
        std::size_t cell = 0;
        for (std::size_t T : grid.scales) {
            for (double c0 : grid.thresholds) {
                CellStats stats;
                stats.scale_T = T;
                stats.cost_threshold = c0;
                stats.trials = options.n_trials;
                std::vector<double> selected;
                double anchors = 0.0;
                double full = 0.0;
                double fa = 0.0;
                double md = 0.0;
                for (const TrialResult& t : trials) {
                    const TrialMetrics& m = t.cells[cell];
                    stats.per_trial.push_back(m);
                    anchors += static_cast<double>(m.n_anchors);
                    if (m.failed) {
                        ++stats.failures;
                        continue;
                    }
                    selected.push_back(m.mse_selected);
                    full += m.mse_full;
                    fa += m.p_fa;
                    md += m.p_md;
                }
                stats.mean_anchors = anchors / static_cast<double>(options.n_trials);
                const auto ok = static_cast<double>(selected.size());
                if (!selected.empty()) {
                    stats.mean_mse_selected = mean_of(selected);
                    double ss = 0.0;
                    for (double v : selected) {
                        ss += (v - stats.mean_mse_selected) * (v - stats.mean_mse_selected);
                    }
                    stats.sd_mse_selected = selected.size() > 1 ? std::sqrt(ss / (ok - 1.0)) : 0.0;
                    stats.mean_mse_full = full / ok;
                    stats.mean_p_fa = fa / ok;
                    stats.mean_p_md = md / ok;
                }
                report.cells.push_back(std::move(stats));
                ++cell;
            }
        }
    }

    if (options.run_comparators) {
        MethodComparison cmp;
        for (const TrialResult& t : trials) {
            cmp.proposed.push_back(t.proposed);
            cmp.airpls.push_back(t.airpls);
            cmp.quantile.push_back(t.quantile);
            if (std::isnan(t.proposed)) {
                ++cmp.proposed_failures;
            } else if (t.proposed < t.airpls && t.airpls < t.quantile) {
                ++cmp.trials_ordered;
            }
            if (!t.quantile_converged) {
                ++cmp.quantile_nonconverged;
            }
        }
        cmp.mean_proposed = mean_of(cmp.proposed);
        cmp.mean_airpls = mean_of(cmp.airpls);
        cmp.mean_quantile = mean_of(cmp.quantile);
        report.comparison = std::move(cmp);
    }
    return report;
}

} // namespace wetbase::eval
