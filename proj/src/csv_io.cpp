// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "wetbase/error.hpp"

namespace wetbase::io {

namespace {

constexpr const char* kModule = "tool_io";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::malformed_row, kModule, "line " + std::to_string(line) + ": " + what);
}

std::optional<double> parse_number(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

/// Minutes since the epoch for `YYYY-MM-DD[T ]HH:MM[:SS]`.
std::optional<double> parse_iso_minutes(std::string_view cell) {
    int y = 0;
    unsigned mo = 0;
    unsigned d = 0;
    unsigned h = 0;
    unsigned mi = 0;
    double sec = 0.0;
    char sep = 0;
    const std::string text(cell);
    int consumed = 0;
    const int fields = std::sscanf(text.c_str(), "%4d-%2u-%2u%c%2u:%2u%n", &y, &mo, &d, &sep, &h, &mi, &consumed);
    if (fields != 6 || (sep != 'T' && sep != ' ')) {
        return std::nullopt;
    }
    std::string_view rest = cell.substr(static_cast<std::size_t>(consumed));
    if (!rest.empty()) {
        if (rest.front() != ':') {
            return std::nullopt;
        }
        const auto s = parse_number(rest.substr(1));
        if (!s || *s < 0.0 || *s >= 61.0) {
            return std::nullopt;
        }
        sec = *s;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo}, std::chrono::day{d}};
    if (!ymd.ok() || h > 23 || mi > 59) {
        return std::nullopt;
    }
    const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
    return static_cast<double>(days) * 1440.0 + static_cast<double>(h) * 60.0 + static_cast<double>(mi) + sec / 60.0;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::missing_file, kModule, "cannot open '" + path.string() + "'");
    }
    return in;
}

} // namespace

std::string format_double(double value) {
    if (value == 0.0) {
        return "0"; // also folds -0
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

Signal read_sensor_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    bool with_timestamps = false;
    std::vector<double> values;
    std::vector<double> stamps;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto cells = split(text);
        if (!have_header) {
            if (cells.size() == 1 && cells[0] == "mv") {
                with_timestamps = false;
            } else if (cells.size() == 2 && cells[0] == "timestamp" && cells[1] == "mv") {
                with_timestamps = true;
            } else {
                malformed(line_no, "expected header 'mv' or 'timestamp,mv'");
            }
            have_header = true;
            continue;
        }
        const std::size_t expected = with_timestamps ? 2 : 1;
        if (cells.size() != expected) {
            malformed(line_no, "expected " + std::to_string(expected) + " column(s), found " +
                                   std::to_string(cells.size()));
        }
        const auto mv = parse_number(cells.back());
        if (!mv) {
            malformed(line_no, "invalid amplitude '" + std::string(cells.back()) + "'");
        }
        if (with_timestamps) {
            auto t = parse_number(cells[0]);
            if (!t) {
                t = parse_iso_minutes(cells[0]);
            }
            if (!t) {
                malformed(line_no, "invalid timestamp '" + std::string(cells[0]) + "'");
            }
            stamps.push_back(*t);
        }
        values.push_back(*mv);
    }
    if (!have_header) {
        malformed(line_no, "missing header");
    }
    if (values.empty()) {
        malformed(line_no, "no data rows");
    }

    double period = Signal::default_period_minutes;
    if (with_timestamps && stamps.size() >= 2) {
        period = stamps[1] - stamps[0];
        if (!(period > 0.0)) {
            throw Error(ErrorCode::non_uniform_sampling, kModule, "timestamps must be strictly increasing");
        }
        for (std::size_t i = 1; i < stamps.size(); ++i) {
            const double step = stamps[i] - stamps[i - 1];
            if (std::abs(step - period) > 0.01 * period) {
                throw Error(ErrorCode::non_uniform_sampling, kModule,
                            "sample " + std::to_string(i) + " is " + format_double(step) + " min after its predecessor, expected " +
                                format_double(period));
            }
        }
    }
    return Signal(std::move(values), period);
}

void write_sensor_csv(std::ostream& out, const Signal& signal) {
    out << "mv\n";
    for (double v : signal.values()) {
        out << format_double(v) << '\n';
    }
}

bool NumericTable::has_column(const std::string& name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> NumericTable::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw Error(ErrorCode::invalid_params, kModule, "no column named '" + name + "'");
    }
    const auto k = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row[k]);
    }
    return out;
}

NumericTable read_numeric_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    NumericTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto cells = split(text);
        if (table.columns.empty()) {
            for (auto c : cells) {
                table.columns.emplace_back(c);
            }
            continue;
        }
        if (cells.size() != table.columns.size()) {
            malformed(line_no, "expected " + std::to_string(table.columns.size()) + " columns, found " +
                                   std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells) {
            const auto v = parse_number(c);
            if (!v) {
                malformed(line_no, "invalid number '" + std::string(c) + "'");
            }
            row.push_back(*v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) {
        malformed(line_no, "missing header");
    }
    return table;
}

void write_scene_csv(std::ostream& out, const model::SyntheticScene& scene) {
    out << "index,h,b,n,s\n";
    for (std::size_t i = 0; i < scene.s.size(); ++i) {
        out << i << ',' << format_double(scene.h[i]) << ',' << format_double(scene.b[i]) << ','
            << format_double(scene.n[i]) << ',' << format_double(scene.s[i]) << '\n';
    }
}

model::SyntheticScene read_scene_csv(const std::filesystem::path& path) {
    const NumericTable table = read_numeric_csv(path);
    if (table.columns != std::vector<std::string>{"index", "h", "b", "n", "s"}) {
        throw Error(ErrorCode::malformed_row, kModule, "line 1: expected header 'index,h,b,n,s'");
    }
    if (table.rows.empty()) {
        throw Error(ErrorCode::malformed_row, kModule, "scene file has no data rows");
    }
    return {Signal(table.column("h")), Signal(table.column("b")), Signal(table.column("n")),
            Signal(table.column("s")), 0};
}

void write_estimate_csv(std::ostream& out, std::span<const double> s, std::span<const double> b_hat,
                        double threshold_S) {
    if (s.size() != b_hat.size()) {
        throw Error(ErrorCode::length_mismatch, kModule, "signal and baseline lengths differ");
    }
    out << "index,s,b_hat,wet\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << i << ',' << format_double(s[i]) << ',' << format_double(b_hat[i]) << ','
            << (s[i] > b_hat[i] + threshold_S ? 1 : 0) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const std::map<std::size_t, double>& histogram) {
    out << "distance,frequency\n";
    for (const auto& [d, f] : histogram) {
        out << d << ',' << format_double(f) << '\n';
    }
}

void write_benchmark_csv(std::ostream& out, const eval::BenchmarkReport& report) {
    out << "scale_T,cost_C0,trials,failures,mean_anchors,mean_mse_selected,sd_mse_selected,mean_mse_full,"
           "mean_p_fa,mean_p_md\n";
    for (const auto& c : report.cells) {
        out << c.scale_T << ',' << format_double(c.cost_threshold) << ',' << c.trials << ',' << c.failures << ','
            << format_double(c.mean_anchors) << ',' << format_double(c.mean_mse_selected) << ','
            << format_double(c.sd_mse_selected) << ',' << format_double(c.mean_mse_full) << ','
            << format_double(c.mean_p_fa) << ',' << format_double(c.mean_p_md) << '\n';
    }
}

void write_comparison_csv(std::ostream& out, const eval::MethodComparison& comparison, std::size_t trials) {
    out << "method,mean_mse_full,trials,failures\n";
    out << "proposed," << format_double(comparison.mean_proposed) << ',' << trials << ','
        << comparison.proposed_failures << '\n';
    out << "airpls," << format_double(comparison.mean_airpls) << ',' << trials << ",0\n";
    out << "quantile_regression," << format_double(comparison.mean_quantile) << ',' << trials << ",0\n";
}

} // namespace wetbase::io
