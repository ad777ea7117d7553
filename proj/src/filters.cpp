// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/filters.hpp"

#include <algorithm>

#include "wetbase/error.hpp"

namespace wetbase {

std::vector<double> moving_average(std::span<const double> values, std::size_t length) {
    if (length < 1) {
        throw Error(ErrorCode::invalid_length, "filters", "moving-average length must be >= 1");
    }
    const std::size_t n = values.size();
    const auto [left, right] = centered_extent(length);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= left ? i - left : 0;
        const std::size_t hi = std::min(n - 1, i + right);
        out[i] = ordered_mean(values.subspan(lo, hi - lo + 1));
    }
    return out;
}

} // namespace wetbase
