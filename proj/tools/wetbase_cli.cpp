// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: generate synthetic scenes, estimate baselines,
// and run the Monte-Carlo benchmark and method comparison.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wetbase/run.hpp"

int main(int argc, char** argv) {
    using namespace wetbase;

    CLI::App app{"Baseline drift estimation for leaf-wetness sensor signals"};
    app.option_defaults()->always_capture_default();

    io::RunConfig config;
    std::string command;
    std::string input;
    std::string output;
    std::string histogram;
    std::string format = "csv";
    std::string edge = "hold";
    std::string tie = "first";
    std::vector<std::size_t> scales;
    std::vector<double> thresholds;
    bool no_peaks = false;

    app.add_option("--command", command, "generate | estimate | benchmark | compare")
        ->required()
        ->check(CLI::IsMember({"generate", "estimate", "benchmark", "compare"}));
    app.add_option("--input", input, "Sensor CSV (mv or timestamp,mv) or scene CSV (index,h,b,n,s)");
    app.add_option("--output", output, "Output file (default: $WETBASE_OUTPUT_DIR/<command>.<ext>)");
    app.add_option("--histogram", histogram, "estimate: also write the d(i) histogram CSV here");
    app.add_option("--scale-T", scales, "Observation scale T; several values form the benchmark grid");
    app.add_option("--cost-C0", thresholds, "Cost threshold C0; several values form the benchmark grid");
    app.add_option("--smooth-L", config.estimator.smooth_len, "Moving-average pre-filter length")
        ->check(CLI::PositiveNumber);
    app.add_option("--edge-policy", edge, "Baseline extension past the outer anchors")
        ->check(CLI::IsMember({"hold", "linear-extend"}));
    app.add_option("--tie-policy", tie, "Plateau handling for local minima")->check(CLI::IsMember({"first", "all"}));
    app.add_option("--threshold-S", config.threshold_S, "Wetness threshold above the baseline (mV)");
    app.add_option("--lambda", config.airpls.lambda, "airPLS smoothness penalty")->check(CLI::PositiveNumber);
    app.add_option("--quantile", config.quantile.quantile, "Quantile-regression tau")->check(CLI::Range(0.0, 1.0));
    app.add_option("--degree", config.quantile.degree, "Quantile-regression polynomial degree")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--trials", config.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    app.add_option("--threads", config.threads, "Worker threads for trials (0: all cores)");
    app.add_option("--seed", config.model.seed, "Base seed");
    app.add_option("--samples", config.model.n_samples, "Synthetic scene length")->check(CLI::PositiveNumber);
    app.add_option("--noise-power", config.model.noise_power, "Synthetic noise variance (mV^2)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--walk-step", config.model.walk_step, "Synthetic baseline random-walk step (mV)")
        ->check(CLI::PositiveNumber);
    app.add_option("--walk-smooth", config.model.walk_smooth_len, "Synthetic baseline smoothing length")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-peaks", no_peaks, "Synthetic scenes without wetness peaks");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = *io::parse_command(command);
    config.format = format == "json" ? io::Format::json : io::Format::csv;
    config.estimator.edge_policy = edge == "hold" ? EdgePolicy::hold : EdgePolicy::linear_extend;
    config.estimator.tie_policy = tie == "first" ? TiePolicy::first : TiePolicy::all;
    if (!input.empty()) {
        config.input_path = input;
    }
    if (!output.empty()) {
        config.output_path = output;
    }
    if (!histogram.empty()) {
        config.histogram_path = histogram;
    }
    if (no_peaks) {
        config.model = config.model.without_peaks();
    }

    if (config.command == io::Command::benchmark) {
        if (!scales.empty()) {
            config.grid_scales = scales;
        }
        if (!thresholds.empty()) {
            config.grid_thresholds = thresholds;
        }
    } else {
        if (scales.size() > 1 || thresholds.size() > 1) {
            std::cerr << "error: --scale-T and --cost-C0 take a single value for " << command << '\n';
            return 2;
        }
        if (!scales.empty()) {
            config.estimator.scale_T = scales.front();
        }
        if (!thresholds.empty()) {
            config.estimator.cost_threshold = thresholds.front();
        }
    }

    return io::run(config, std::cout, std::cerr);
}
