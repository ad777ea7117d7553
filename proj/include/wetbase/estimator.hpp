// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file estimator.hpp
/// @brief Baseline estimation from L1-cost-selected local minima.
///
/// The estimate is built in three steps: moving-average smoothing, selection
/// of scale-T local minima whose mean absolute deviation over the window
/// [t0 - T, t0 + T] is below C0, and linear interpolation of the selected
/// anchors. Anchors are measured on the smoothed signal.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wetbase/signal.hpp"

namespace wetbase {

enum class EdgePolicy { hold, linear_extend };
enum class TiePolicy { first, all };

struct EstimatorConfig {
    std::size_t scale_T = 5;
    double cost_threshold = 1.0; // C0, mV
    std::size_t smooth_len = 10;
    EdgePolicy edge_policy = EdgePolicy::hold;
    TiePolicy tie_policy = TiePolicy::first;

    /// Throws Error(invalid_params).
    void validate() const;
};

struct Anchor {
    std::size_t index;
    double value;

    friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct BaselineEstimate {
    std::vector<Anchor> anchors;
    Signal baseline;
    Signal smoothed;
    EstimatorConfig config;
};

/// Centered moving average with shrinking edge windows.
[[nodiscard]] std::vector<double> smooth(std::span<const double> signal, std::size_t length);

/// Indices i in [T, N-1-T] where signal[i] is the minimum of [i-T, i+T].
/// With TiePolicy::first, an index is dropped when its predecessor also
/// qualifies (consecutive qualifying indices always share the same value).
[[nodiscard]] std::vector<std::size_t> local_minima(std::span<const double> signal, std::size_t scale_T,
                                                    TiePolicy tie = TiePolicy::first);

/// Mean of |s(t0 + j) - s(t0)| for j in [-T, T]. Throws Error(out_of_range)
/// when the window leaves the signal.
[[nodiscard]] double cost(std::span<const double> signal, std::size_t t0, std::size_t scale_T);

/// Cost of the centre sample of a window of odd length 2T + 1, accumulated
/// front to back (shared by the batch and streaming paths).
template <typename Range>
[[nodiscard]] double window_cost(const Range& window) noexcept {
    const double centre = window[window.size() / 2];
    double sum = 0.0;
    for (std::size_t i = 0; i < window.size(); ++i) {
        const double d = window[i] - centre;
        sum += d < 0.0 ? -d : d;
    }
    return sum / static_cast<double>(window.size());
}

/// Local minima of the given (already smoothed) signal with cost < C0.
/// An empty result is valid; interpolate() reports it.
[[nodiscard]] std::vector<Anchor> select_anchors(std::span<const double> signal, const EstimatorConfig& config);

/// Piecewise-linear curve through the anchors, extended past both ends by
/// the edge policy. Throws Error(no_anchors) on an empty anchor list.
[[nodiscard]] std::vector<double> interpolate(std::span<const Anchor> anchors, std::size_t n,
                                              EdgePolicy edge = EdgePolicy::hold);

/// smooth -> select_anchors -> interpolate. Requires N > 2T + L.
[[nodiscard]] BaselineEstimate estimate(const Signal& signal, const EstimatorConfig& config);

} // namespace wetbase
