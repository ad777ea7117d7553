// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wetbase {

/// Uniformly sampled sensor amplitudes in mV.
///
/// Construction enforces a non-empty, finite series and a positive sampling
/// period (minutes). Throws wetbase::Error(invalid_params) otherwise.
class Signal {
public:
    static constexpr double default_period_minutes = 15.0;

    explicit Signal(std::vector<double> samples, double sample_period = default_period_minutes);

    [[nodiscard]] std::span<const double> values() const noexcept { return samples_; }
    [[nodiscard]] const std::vector<double>& samples() const noexcept { return samples_; }
    [[nodiscard]] double sample_period() const noexcept { return period_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return samples_[i]; }

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<double> samples_;
    double period_;
};

} // namespace wetbase
