// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file benchmark.hpp
/// @brief Monte-Carlo benchmark over synthetic scenes.
///
/// Trial k uses the scene generated with seed params.seed + k. Trials run on
/// a worker pool and are merged in trial order, so the report does not
/// depend on the thread count.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wetbase/comparators.hpp"
#include "wetbase/estimator.hpp"
#include "wetbase/signal_model.hpp"

namespace wetbase::eval {

struct BenchmarkGrid {
    std::vector<std::size_t> scales{3, 5, 7, 10, 15, 20};
    std::vector<double> thresholds{0.1, 1.0};
    std::size_t smooth_len = 10;
};

struct BenchmarkOptions {
    std::size_t n_trials = 55;
    double threshold_S = 5.0;
    bool run_grid = true;
    bool run_comparators = true;
    EstimatorConfig proposed{}; // configuration compared against the comparators
    comparators::AirPlsConfig airpls{};
    comparators::QuantRegConfig quantile{};
    std::size_t threads = 0; // 0: hardware concurrency
};

/// Per-trial values for one (T, C0) cell.
struct TrialMetrics {
    std::size_t n_anchors = 0;
    bool failed = false; // no anchors selected
    double mse_selected = 0.0;
    double mse_full = 0.0;
    double p_fa = 0.0;
    double p_md = 0.0;
};

struct CellStats {
    std::size_t scale_T = 0;
    double cost_threshold = 0.0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double mean_anchors = 0.0; // over all trials, failures count as 0
    // The remaining statistics are over successful trials only.
    double mean_mse_selected = 0.0;
    double sd_mse_selected = 0.0;
    double mean_mse_full = 0.0;
    double mean_p_fa = 0.0;
    double mean_p_md = 0.0;
    std::vector<TrialMetrics> per_trial;
};

struct MethodComparison {
    // Full-series MSE per trial; NaN where the proposed estimator failed.
    std::vector<double> proposed;
    std::vector<double> airpls;
    std::vector<double> quantile;
    double mean_proposed = 0.0;
    double mean_airpls = 0.0;
    double mean_quantile = 0.0;
    std::size_t proposed_failures = 0;
    std::size_t quantile_nonconverged = 0;
    std::size_t trials_ordered = 0; // proposed < airPLS < quantile
};

struct BenchmarkReport {
    model::ModelParams params;
    BenchmarkGrid grid;
    BenchmarkOptions options;
    std::vector<CellStats> cells; // scales outer, thresholds inner
    std::optional<MethodComparison> comparison;
};

[[nodiscard]] BenchmarkReport benchmark(const model::ModelParams& params, const BenchmarkGrid& grid,
                                        const BenchmarkOptions& options);

} // namespace wetbase::eval
