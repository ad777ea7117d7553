// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/streaming.hpp"

#include <algorithm>

#include "wetbase/filters.hpp"

namespace wetbase {

namespace {

EstimatorConfig validated(const EstimatorConfig& config) {
    config.validate();
    return config;
}

} // namespace

StreamingEstimator::StreamingEstimator(const EstimatorConfig& config)
    : config_(validated(config)), raw_(config.smooth_len), smoothed_(2 * config.scale_T + 1) {}

std::size_t StreamingEstimator::latency() const noexcept {
    return config_.scale_T + centered_extent(config_.smooth_len).right;
}

double StreamingEstimator::smoothed_at(std::size_t k) const {
    const auto [left, right] = centered_extent(config_.smooth_len);
    const std::size_t ring_start = raw_count_ - raw_.size();
    const std::size_t lo = k >= left ? k - left : 0;
    const std::size_t hi = std::min(raw_count_ - 1, k + right);
    return ordered_mean(RingSlice<double>(raw_, lo - ring_start, hi - lo + 1));
}

std::optional<StreamEmission> StreamingEstimator::push(double sample) {
    raw_.push(sample);
    ++raw_count_;
    const std::size_t right = centered_extent(config_.smooth_len).right;
    if (raw_count_ <= right) {
        return std::nullopt;
    }
    return accept_smoothed(smoothed_at(raw_count_ - 1 - right));
}

std::optional<StreamEmission> StreamingEstimator::accept_smoothed(double value) {
    smoothed_.push(value);
    if (!first_smoothed_) {
        first_smoothed_ = value;
    }
    const std::size_t k = smoothed_count_++;
    const std::size_t T = config_.scale_T;
    if (k < T) {
        return std::nullopt;
    }
    const std::size_t centre = k - T;
    if (centre < T) {
        return emit(centre, std::nullopt);
    }

    // The ring now holds exactly the window [centre - T, centre + T].
    double window_min = smoothed_[0];
    for (std::size_t i = 1; i < smoothed_.size(); ++i) {
        window_min = std::min(window_min, smoothed_[i]);
    }
    const double centre_value = smoothed_[T];
    const bool qualifies = centre_value == window_min;
    std::optional<Anchor> anchor;
    if (qualifies && !(config_.tie_policy == TiePolicy::first && previous_qualified_) &&
        window_cost(smoothed_) < config_.cost_threshold) {
        anchor = Anchor{centre, centre_value};
    }
    previous_qualified_ = qualifies;
    return emit(centre, anchor);
}

StreamEmission StreamingEstimator::emit(std::size_t index, std::optional<Anchor> anchor) {
    if (anchor) {
        last_anchor_ = anchor;
    }
    emitted_count_ = index + 1;
    const double value = last_anchor_ ? last_anchor_->value : *first_smoothed_;
    return {index, value, anchor};
}

std::vector<StreamEmission> StreamingEstimator::finish() {
    std::vector<StreamEmission> out;
    for (std::size_t k = smoothed_count_; k < raw_count_; ++k) {
        if (auto e = accept_smoothed(smoothed_at(k))) {
            out.push_back(*e);
        }
    }
    for (std::size_t i = emitted_count_; i < raw_count_; ++i) {
        out.push_back(emit(i, std::nullopt));
    }
    reset();
    return out;
}

void StreamingEstimator::reset() {
    raw_ = RingBuffer<double>(raw_.capacity());
    smoothed_ = RingBuffer<double>(smoothed_.capacity());
    raw_count_ = 0;
    smoothed_count_ = 0;
    emitted_count_ = 0;
    previous_qualified_ = false;
    first_smoothed_.reset();
    last_anchor_.reset();
}

} // namespace wetbase
