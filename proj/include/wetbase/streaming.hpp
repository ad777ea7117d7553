// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file streaming.hpp
/// @brief Bounded-memory online variant of the baseline estimator.
///
/// The estimator keeps the last L raw samples (for the moving average) and
/// the last 2T + 1 smoothed samples (for the minimum and cost tests), so its
/// buffers never hold more than 2T + L + 1 values regardless of stream length.
///
/// Each pushed sample releases at most one emission. The value emitted for
/// index i is final and is released once raw sample i + T + L/2 has been
/// pushed (integer division). Emitted values hold the most recent anchor; before the
/// first anchor they hold the first smoothed sample. Every accepted anchor is
/// reported with its emission, so a consumer that can tolerate latency may
/// rebuild the batch interpolation segment by segment with interpolate().
///
/// Anchors are bit-identical to select_anchors() on the batch-smoothed
/// signal. The low-latency values equal the batch (hold-policy) baseline at
/// every anchor and after the final anchor; between anchors they hold rather
/// than interpolate, and before the first anchor they hold the first smoothed
/// sample rather than the first anchor.
///
/// Single-owner mutable state: move it between threads, do not share it.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wetbase/estimator.hpp"
#include "wetbase/ring_buffer.hpp"

namespace wetbase {

struct StreamEmission {
    std::size_t index;
    double value;
    std::optional<Anchor> anchor;

    friend bool operator==(const StreamEmission&, const StreamEmission&) = default;
};

class StreamingEstimator {
public:
    explicit StreamingEstimator(const EstimatorConfig& config);

    /// Feed one raw sample. Returns the emission it releases, if any.
    std::optional<StreamEmission> push(double sample);

    /// Close the stream: flush the shrinking-window tail and emit every
    /// remaining index. The estimator is reset afterwards.
    std::vector<StreamEmission> finish();

    [[nodiscard]] std::size_t latency() const noexcept;
    [[nodiscard]] std::size_t buffer_capacity() const noexcept { return raw_.capacity() + smoothed_.capacity(); }
    [[nodiscard]] std::size_t buffer_occupancy() const noexcept { return raw_.size() + smoothed_.size(); }
    [[nodiscard]] const EstimatorConfig& config() const noexcept { return config_; }

private:
    double smoothed_at(std::size_t k) const;
    std::optional<StreamEmission> accept_smoothed(double value);
    StreamEmission emit(std::size_t index, std::optional<Anchor> anchor);
    void reset();

    EstimatorConfig config_;
    RingBuffer<double> raw_;
    RingBuffer<double> smoothed_;
    std::size_t raw_count_ = 0;      // raw samples received
    std::size_t smoothed_count_ = 0; // smoothed samples produced
    std::size_t emitted_count_ = 0;  // next index to emit
    bool previous_qualified_ = false;
    std::optional<double> first_smoothed_;
    std::optional<Anchor> last_anchor_;
};

} // namespace wetbase
