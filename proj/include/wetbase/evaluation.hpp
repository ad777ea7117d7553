// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file evaluation.hpp
/// @brief Baseline error metrics and wet/dry classification errors.
///
/// A sample is wet when s(i) exceeds baseline + S. Comparing the true
/// threshold b + S against the estimated one b_hat + S yields false alarms
/// (wet only under the estimate) and missed detections (wet only under the
/// truth). Probabilities are set sizes divided by N.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "wetbase/estimator.hpp"
#include "wetbase/signal_model.hpp"

namespace wetbase::eval {

/// Wet-phase condition used by distance_to_wet(). with_offset compares
/// against b + S and b_hat + S; without_offset against b and b_hat.
enum class WetCondition { with_offset, without_offset };

struct ErrorSets {
    std::vector<std::size_t> false_alarms;
    std::vector<std::size_t> missed_detections;
    double p_fa = 0.0;
    double p_md = 0.0;
};

struct DistanceReport {
    std::vector<std::size_t> distances;           // aligned with the queried indices
    std::map<std::size_t, double> histogram;      // distance -> relative frequency
};

struct EvalReport {
    double mse_selected = 0.0;
    double mse_full = 0.0;
    double p_fa = 0.0;
    double p_md = 0.0;
    std::map<std::size_t, double> d_histogram;
    bool wet_phase_found = true;
    std::size_t n_anchors = 0;
    double threshold_S = 0.0;
};

/// Mean of (anchor value - truth(anchor index))^2. Throws no_anchors.
[[nodiscard]] double mse_selected(std::span<const Anchor> anchors, std::span<const double> truth);
[[nodiscard]] double mse_selected(const BaselineEstimate& estimate, std::span<const double> truth);

[[nodiscard]] double mse_full(std::span<const double> estimated, std::span<const double> truth);

[[nodiscard]] ErrorSets fa_md_sets(std::span<const double> s, std::span<const double> b_true,
                                   std::span<const double> b_hat, double threshold_S);

/// Field-data mode without ground truth: the fixed threshold S takes the
/// place of the estimated threshold and the adaptive b_hat + S the place of
/// the reference one.
[[nodiscard]] ErrorSets field_error_sets(std::span<const double> s, std::span<const double> b_hat, double threshold_S);

/// Distance from each queried index to the nearest sample that is wet under
/// both thresholds. Linear time. Throws Error(no_wet_phase) when no sample
/// is wet under both.
[[nodiscard]] DistanceReport distance_to_wet(std::span<const double> s, std::span<const double> b_true,
                                             std::span<const double> b_hat, double threshold_S,
                                             std::span<const std::size_t> indices,
                                             WetCondition condition = WetCondition::with_offset);

/// Normalised histogram of distances; empty input gives an empty map.
[[nodiscard]] std::map<std::size_t, double> normalized_histogram(std::span<const std::size_t> distances);

[[nodiscard]] EvalReport evaluate(const model::SyntheticScene& scene, const BaselineEstimate& estimate,
                                  double threshold_S);

} // namespace wetbase::eval
