// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wetbase/csv_io.hpp"
#include "wetbase/error.hpp"
#include "wetbase/evaluation.hpp"

namespace wetbase::io {

namespace {

using nlohmann::json;

constexpr const char* kModule = "tool_io";

/// Finite doubles as numbers, anything else as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const std::map<std::size_t, double>& histogram) {
    json out = json::array();
    for (const auto& [d, f] : histogram) {
        out.push_back({{"distance", d}, {"frequency", f}});
    }
    return out;
}

json to_json(const EstimatorConfig& c) {
    return {{"scale_T", c.scale_T},
            {"cost_C0", c.cost_threshold},
            {"smooth_L", c.smooth_len},
            {"edge_policy", c.edge_policy == EdgePolicy::hold ? "hold" : "linear-extend"},
            {"tie_policy", c.tie_policy == TiePolicy::first ? "first" : "all"}};
}

json to_json(const eval::MethodComparison& m, std::size_t trials) {
    auto series = [](const std::vector<double>& v) {
        json a = json::array();
        for (double x : v) {
            a.push_back(number(x));
        }
        return a;
    };
    return {{"trials", trials},
            {"mean_mse_full", {{"proposed", number(m.mean_proposed)}, {"airpls", m.mean_airpls},
                               {"quantile_regression", m.mean_quantile}}},
            {"per_trial_mse_full", {{"proposed", series(m.proposed)}, {"airpls", series(m.airpls)},
                                    {"quantile_regression", series(m.quantile)}}},
            {"proposed_failures", m.proposed_failures},
            {"quantile_nonconverged", m.quantile_nonconverged},
            {"trials_ordered", m.trials_ordered}};
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::missing_file, kModule, "cannot write '" + path.string() + "'");
    }
    return out;
}

void write_json(const std::filesystem::path& path, const json& doc) {
    auto out = open_output(path);
    out << doc.dump(2) << '\n';
}

/// Input scene CSVs carry ground truth; sensor CSVs do not.
struct Input {
    Signal s;
    std::optional<model::SyntheticScene> scene;
};

Input load_input(const RunConfig& config) {
    if (!config.input_path) {
        auto scene = model::generate_scene(config.model);
        return {scene.s, std::move(scene)};
    }
    std::ifstream probe(*config.input_path);
    if (!probe) {
        throw Error(ErrorCode::missing_file, kModule, "cannot open '" + config.input_path->string() + "'");
    }
    std::string header;
    std::getline(probe, header);
    if (!header.empty() && header.back() == '\r') {
        header.pop_back();
    }
    if (header == "index,h,b,n,s") {
        auto scene = read_scene_csv(*config.input_path);
        return {scene.s, std::move(scene)};
    }
    return {read_sensor_csv(*config.input_path), std::nullopt};
}

void run_generate(const RunConfig& config, const std::filesystem::path& out_path, std::ostream& log) {
    const auto scene = model::generate_scene(config.model);
    if (config.format == Format::json) {
        write_json(out_path, {{"seed", scene.seed},
                              {"h", scene.h.samples()},
                              {"b", scene.b.samples()},
                              {"n", scene.n.samples()},
                              {"s", scene.s.samples()}});
    } else {
        auto out = open_output(out_path);
        write_scene_csv(out, scene);
    }
    log << "generated " << scene.s.size() << " samples (seed " << scene.seed << ") -> " << out_path.string() << '\n';
}

void run_estimate(const RunConfig& config, const std::filesystem::path& out_path, std::ostream& log) {
    const Input input = load_input(config);
    const BaselineEstimate est = estimate(input.s, config.estimator);
    const auto s = input.s.values();
    const auto b_hat = est.baseline.values();

    std::optional<eval::EvalReport> report;
    std::map<std::size_t, double> histogram;
    bool wet_found = true;
    if (input.scene) {
        report = eval::evaluate(*input.scene, est, config.threshold_S);
        histogram = report->d_histogram;
        wet_found = report->wet_phase_found;
    } else {
        // Field mode: fixed threshold S against the adaptive b_hat + S.
        const auto sets = eval::field_error_sets(s, b_hat, config.threshold_S);
        std::vector<std::size_t> errors;
        std::merge(sets.false_alarms.begin(), sets.false_alarms.end(), sets.missed_detections.begin(),
                   sets.missed_detections.end(), std::back_inserter(errors));
        const std::vector<double> zero(s.size(), 0.0);
        try {
            histogram = eval::distance_to_wet(s, b_hat, zero, config.threshold_S, errors).histogram;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::no_wet_phase) {
                throw;
            }
            wet_found = false;
        }
    }

    if (config.format == Format::json) {
        json anchors = json::array();
        for (const Anchor& a : est.anchors) {
            anchors.push_back({{"index", a.index}, {"value", a.value}});
        }
        std::vector<int> wet(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            wet[i] = s[i] > b_hat[i] + config.threshold_S ? 1 : 0;
        }
        json doc = {{"config", to_json(config.estimator)},
                    {"threshold_S", config.threshold_S},
                    {"anchors", anchors},
                    {"s", input.s.samples()},
                    {"b_hat", est.baseline.samples()},
                    {"wet", wet},
                    {"wet_phase_found", wet_found},
                    {"d_histogram", to_json(histogram)}};
        if (report) {
            doc["metrics"] = {{"mse_selected", report->mse_selected}, {"mse_full", report->mse_full},
                              {"p_fa", report->p_fa}, {"p_md", report->p_md}, {"n_anchors", report->n_anchors}};
        }
        write_json(out_path, doc);
    } else {
        auto out = open_output(out_path);
        write_estimate_csv(out, s, b_hat, config.threshold_S);
    }
    if (config.histogram_path) {
        auto out = open_output(*config.histogram_path);
        write_histogram_csv(out, histogram);
    }

    log << "anchors: " << est.anchors.size() << " of " << s.size() << " samples\n";
    if (report) {
        log << std::left << std::setw(14) << "mse_selected" << format_double(report->mse_selected) << '\n'
            << std::setw(14) << "mse_full" << format_double(report->mse_full) << '\n'
            << std::setw(14) << "p_fa" << format_double(report->p_fa) << '\n'
            << std::setw(14) << "p_md" << format_double(report->p_md) << '\n';
    }
}

eval::BenchmarkOptions bench_options(const RunConfig& config, bool grid, bool comparators) {
    eval::BenchmarkOptions options;
    options.n_trials = config.trials;
    options.threshold_S = config.threshold_S;
    options.run_grid = grid;
    options.run_comparators = comparators;
    options.proposed = config.estimator;
    options.airpls = config.airpls;
    options.quantile = config.quantile;
    options.threads = config.threads;
    return options;
}

void print_cells(const eval::BenchmarkReport& report, std::ostream& log) {
    log << std::right << std::setw(4) << "T" << std::setw(8) << "C0" << std::setw(10) << "|anchors|" << std::setw(14)
        << "mse_selected" << std::setw(12) << "mse_full" << std::setw(12) << "P_FA" << std::setw(12) << "P_MD"
        << std::setw(10) << "failures" << '\n';
    for (const auto& c : report.cells) {
        log << std::setw(4) << c.scale_T << std::setw(8) << format_double(c.cost_threshold) << std::fixed
            << std::setprecision(1) << std::setw(10) << c.mean_anchors << std::setprecision(4) << std::setw(14)
            << c.mean_mse_selected << std::setw(12) << c.mean_mse_full << std::setprecision(6) << std::setw(12)
            << c.mean_p_fa << std::setw(12) << c.mean_p_md << std::setw(10) << c.failures << '\n'
            << std::defaultfloat << std::setprecision(6);
    }
}

void print_comparison(const eval::MethodComparison& m, std::size_t trials, std::ostream& log) {
    log << std::left << std::setw(22) << "method" << "mean_mse_full\n"
        << std::setw(22) << "proposed" << format_double(m.mean_proposed) << '\n'
        << std::setw(22) << "airpls" << format_double(m.mean_airpls) << '\n'
        << std::setw(22) << "quantile_regression" << format_double(m.mean_quantile) << '\n'
        << "ordered proposed < airpls < quantile in " << m.trials_ordered << " of " << trials << " trials\n"
        << std::right;
}

void run_benchmark(const RunConfig& config, const std::filesystem::path& out_path, std::ostream& log) {
    const eval::BenchmarkGrid grid{config.grid_scales, config.grid_thresholds, config.estimator.smooth_len};
    const auto report = eval::benchmark(config.model, grid, bench_options(config, true, true));
    if (config.format == Format::json) {
        json cells = json::array();
        for (const auto& c : report.cells) {
            cells.push_back({{"scale_T", c.scale_T},
                             {"cost_C0", c.cost_threshold},
                             {"trials", c.trials},
                             {"failures", c.failures},
                             {"mean_anchors", c.mean_anchors},
                             {"mean_mse_selected", c.mean_mse_selected},
                             {"sd_mse_selected", c.sd_mse_selected},
                             {"mean_mse_full", c.mean_mse_full},
                             {"mean_p_fa", c.mean_p_fa},
                             {"mean_p_md", c.mean_p_md}});
        }
        write_json(out_path, {{"seed", config.model.seed},
                              {"n_samples", config.model.n_samples},
                              {"threshold_S", config.threshold_S},
                              {"cells", cells},
                              {"comparison", to_json(*report.comparison, config.trials)}});
    } else {
        auto out = open_output(out_path);
        write_benchmark_csv(out, report);
    }
    print_cells(report, log);
    print_comparison(*report.comparison, config.trials, log);
}

void run_compare(const RunConfig& config, const std::filesystem::path& out_path, std::ostream& log) {
    const auto report = eval::benchmark(config.model, {}, bench_options(config, false, true));
    if (config.format == Format::json) {
        json doc = to_json(*report.comparison, config.trials);
        doc["proposed_config"] = to_json(config.estimator);
        doc["airpls_lambda"] = config.airpls.lambda;
        doc["quantile"] = {{"degree", config.quantile.degree}, {"tau", config.quantile.quantile}};
        write_json(out_path, doc);
    } else {
        auto out = open_output(out_path);
        write_comparison_csv(out, *report.comparison, config.trials);
    }
    print_comparison(*report.comparison, config.trials, log);
}

} // namespace

std::optional<Command> parse_command(const std::string& name) {
    if (name == "generate") return Command::generate;
    if (name == "estimate") return Command::estimate;
    if (name == "benchmark") return Command::benchmark;
    if (name == "compare") return Command::compare;
    return std::nullopt;
}

std::string to_string(Command command) {
    switch (command) {
    case Command::generate: return "generate";
    case Command::estimate: return "estimate";
    case Command::benchmark: return "benchmark";
    case Command::compare: return "compare";
    }
    return "unknown";
}

std::filesystem::path resolve_output(const RunConfig& config) {
    if (config.output_path) {
        return *config.output_path;
    }
    std::filesystem::path dir = ".";
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        dir = env;
    }
    return dir / (to_string(config.command) + (config.format == Format::json ? ".json" : ".csv"));
}

int run(const RunConfig& config, std::ostream& log, std::ostream& err) {
    try {
        const auto out_path = resolve_output(config);
        switch (config.command) {
        case Command::generate: run_generate(config, out_path, log); break;
        case Command::estimate: run_estimate(config, out_path, log); break;
        case Command::benchmark: run_benchmark(config, out_path, log); break;
        case Command::compare: run_compare(config, out_path, log); break;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace wetbase::io
