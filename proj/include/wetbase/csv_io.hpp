// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file csv_io.hpp
/// @brief CSV ingestion and plot-ready output. All writers use '.' as the
/// decimal point, LF line endings and shortest round-trip number formatting.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wetbase/benchmark.hpp"
#include "wetbase/estimator.hpp"
#include "wetbase/signal.hpp"
#include "wetbase/signal_model.hpp"

namespace wetbase::io {

/// Shortest decimal representation that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

/// Reads a sensor series with header `mv` or `timestamp,mv`. Timestamps are
/// either numbers (minutes) or ISO-8601 date-times `YYYY-MM-DD[T ]HH:MM[:SS]`;
/// when present they must be evenly spaced within 1% of the first interval,
/// which becomes the sample period.
/// Errors: missing_file, malformed_row (with 1-based line number),
/// non_uniform_sampling.
[[nodiscard]] Signal read_sensor_csv(const std::filesystem::path& path);

void write_sensor_csv(std::ostream& out, const Signal& signal);

/// Numeric CSV with a header row; every data cell must parse as a finite number.
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::vector<double> column(const std::string& name) const;
    [[nodiscard]] bool has_column(const std::string& name) const;
};
[[nodiscard]] NumericTable read_numeric_csv(const std::filesystem::path& path);

/// `index,h,b,n,s`
void write_scene_csv(std::ostream& out, const model::SyntheticScene& scene);
[[nodiscard]] model::SyntheticScene read_scene_csv(const std::filesystem::path& path);

/// `index,s,b_hat,wet`, wet = 1 when s > b_hat + S.
void write_estimate_csv(std::ostream& out, std::span<const double> s, std::span<const double> b_hat,
                        double threshold_S);

/// `distance,frequency`
void write_histogram_csv(std::ostream& out, const std::map<std::size_t, double>& histogram);

/// One row per (T, C0) cell.
void write_benchmark_csv(std::ostream& out, const eval::BenchmarkReport& report);

/// `method,mean_mse_full,trials,failures`
void write_comparison_csv(std::ostream& out, const eval::MethodComparison& comparison, std::size_t trials);

} // namespace wetbase::io
