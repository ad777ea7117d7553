// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file run.hpp
/// @brief Command orchestration shared by the CLI and the tests.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wetbase/benchmark.hpp"
#include "wetbase/comparators.hpp"
#include "wetbase/estimator.hpp"
#include "wetbase/signal_model.hpp"

namespace wetbase::io {

enum class Command { generate, estimate, benchmark, compare };
enum class Format { csv, json };

/// Environment variable naming the directory for outputs written without an
/// explicit --output.
inline constexpr const char* kOutputDirEnv = "WETBASE_OUTPUT_DIR";

struct RunConfig {
    Command command = Command::generate;
    std::optional<std::filesystem::path> input_path;
    std::optional<std::filesystem::path> output_path;
    std::optional<std::filesystem::path> histogram_path; // estimate: d(i) histogram CSV
    EstimatorConfig estimator{};
    model::ModelParams model{};
    comparators::AirPlsConfig airpls{};
    comparators::QuantRegConfig quantile{};
    std::vector<std::size_t> grid_scales{3, 5, 7, 10, 15, 20};
    std::vector<double> grid_thresholds{0.1, 1.0};
    double threshold_S = 5.0;
    std::size_t trials = 55;
    std::size_t threads = 0;
    Format format = Format::csv;
};

[[nodiscard]] std::optional<Command> parse_command(const std::string& name);
[[nodiscard]] std::string to_string(Command command);

/// Output location: output_path if set, otherwise "<command>.<ext>" under
/// $WETBASE_OUTPUT_DIR (or the working directory).
[[nodiscard]] std::filesystem::path resolve_output(const RunConfig& config);

/// Runs one command. Writes the primary artifact to resolve_output(config),
/// an aligned-column summary to `log`, and diagnostics to `err`.
/// Returns 0 on success, 1 on any error.
int run(const RunConfig& config, std::ostream& log, std::ostream& err);

} // namespace wetbase::io
