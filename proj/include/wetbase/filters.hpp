// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wetbase {

/// Extent of a centered moving-average window of length L: it covers
/// [i - left, i + right] with right = L / 2 and left = L - 1 - right.
struct WindowExtent {
    std::size_t left;
    std::size_t right;
};

[[nodiscard]] constexpr WindowExtent centered_extent(std::size_t length) noexcept {
    const std::size_t right = length / 2;
    return {length - 1 - right, right};
}

/// Mean of the values, accumulated front to back. Batch and streaming filters
/// both go through here so that they produce bit-identical results.
template <typename Range>
[[nodiscard]] double ordered_mean(const Range& window) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < window.size(); ++i) {
        sum += window[i];
    }
    return sum / static_cast<double>(window.size());
}

/// Centered moving average of length L. Windows shrink at the edges to the
/// available samples. Throws Error(invalid_length) when L < 1.
[[nodiscard]] std::vector<double> moving_average(std::span<const double> values, std::size_t length);

} // namespace wetbase
