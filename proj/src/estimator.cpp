// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/estimator.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "wetbase/error.hpp"
#include "wetbase/filters.hpp"

namespace wetbase {

void EstimatorConfig::validate() const {
    if (scale_T < 1) {
        throw Error(ErrorCode::invalid_params, "estimator", "scale_T must be >= 1");
    }
    if (!(cost_threshold > 0.0)) {
        throw Error(ErrorCode::invalid_params, "estimator", "cost threshold C0 must be > 0");
    }
    if (smooth_len < 1) {
        throw Error(ErrorCode::invalid_params, "estimator", "smooth_len must be >= 1");
    }
}

std::vector<double> smooth(std::span<const double> signal, std::size_t length) {
    if (length < 1) {
        throw Error(ErrorCode::invalid_length, "estimator", "smoothing length must be >= 1");
    }
    if (signal.empty()) {
        throw Error(ErrorCode::invalid_params, "estimator", "cannot smooth an empty signal");
    }
    return moving_average(signal, length);
}

std::vector<std::size_t> local_minima(std::span<const double> signal, std::size_t scale_T, TiePolicy tie) {
    std::vector<std::size_t> out;
    const std::size_t n = signal.size();
    const std::size_t width = 2 * scale_T + 1;
    if (scale_T < 1 || n < width) {
        return out;
    }
    // Monotonic deque of indices with increasing values: front is the window minimum.
    std::deque<std::size_t> window;
    bool previous_qualified = false;
    for (std::size_t j = 0; j < n; ++j) {
        while (!window.empty() && signal[window.back()] >= signal[j]) {
            window.pop_back();
        }
        window.push_back(j);
        if (j + 1 < width) {
            continue;
        }
        const std::size_t lo = j + 1 - width;
        while (window.front() < lo) {
            window.pop_front();
        }
        const std::size_t centre = lo + scale_T;
        const bool qualifies = signal[centre] == signal[window.front()];
        if (qualifies && !(tie == TiePolicy::first && previous_qualified)) {
            out.push_back(centre);
        }
        previous_qualified = qualifies;
    }
    return out;
}

double cost(std::span<const double> signal, std::size_t t0, std::size_t scale_T) {
    if (t0 < scale_T || t0 + scale_T >= signal.size()) {
        throw Error(ErrorCode::out_of_range, "estimator",
                    "cost window around index " + std::to_string(t0) + " exceeds signal bounds");
    }
    return window_cost(signal.subspan(t0 - scale_T, 2 * scale_T + 1));
}

std::vector<Anchor> select_anchors(std::span<const double> signal, const EstimatorConfig& config) {
    config.validate();
    std::vector<Anchor> anchors;
    for (std::size_t i : local_minima(signal, config.scale_T, config.tie_policy)) {
        if (cost(signal, i, config.scale_T) < config.cost_threshold) {
            anchors.push_back({i, signal[i]});
        }
    }
    return anchors;
}

std::vector<double> interpolate(std::span<const Anchor> anchors, std::size_t n, EdgePolicy edge) {
    if (anchors.empty()) {
        throw Error(ErrorCode::no_anchors, "estimator", "no anchors selected; widen C0 or change T");
    }
    if (n < 1) {
        throw Error(ErrorCode::invalid_length, "estimator", "output length must be >= 1");
    }
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        if (anchors[k].index >= n || (k > 0 && anchors[k].index <= anchors[k - 1].index)) {
            throw Error(ErrorCode::invalid_params, "estimator", "anchor indices must be strictly increasing and < n");
        }
    }

    auto segment_value = [](const Anchor& a, const Anchor& b, double x) {
        const double t = (x - static_cast<double>(a.index)) / static_cast<double>(b.index - a.index);
        return a.value + t * (b.value - a.value);
    };

    std::vector<double> out(n);
    const Anchor& first = anchors.front();
    const Anchor& last = anchors.back();
    const bool extend = edge == EdgePolicy::linear_extend && anchors.size() >= 2;

    for (std::size_t i = 0; i < first.index; ++i) {
        out[i] = extend ? segment_value(anchors[0], anchors[1], static_cast<double>(i)) : first.value;
    }
    for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
        const Anchor& a = anchors[k];
        const Anchor& b = anchors[k + 1];
        out[a.index] = a.value;
        for (std::size_t i = a.index + 1; i < b.index; ++i) {
            out[i] = segment_value(a, b, static_cast<double>(i));
        }
    }
    out[last.index] = last.value;
    for (std::size_t i = last.index + 1; i < n; ++i) {
        out[i] = extend ? segment_value(anchors[anchors.size() - 2], last, static_cast<double>(i)) : last.value;
    }
    return out;
}

BaselineEstimate estimate(const Signal& signal, const EstimatorConfig& config) {
    config.validate();
    if (signal.size() <= 2 * config.scale_T + config.smooth_len) {
        throw Error(ErrorCode::invalid_params, "estimator",
                    "signal of length " + std::to_string(signal.size()) + " is too short for 2T + L = " +
                        std::to_string(2 * config.scale_T + config.smooth_len));
    }
    auto smoothed = smooth(signal.values(), config.smooth_len);
    auto anchors = select_anchors(smoothed, config);
    auto baseline = interpolate(anchors, signal.size(), config.edge_policy);
    return {std::move(anchors), Signal(std::move(baseline), signal.sample_period()),
            Signal(std::move(smoothed), signal.sample_period()), config};
}

} // namespace wetbase
