// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/evaluation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wetbase/error.hpp"

namespace wetbase::eval {

namespace {

constexpr const char* kModule = "evaluation";

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::length_mismatch, kModule,
                    "series lengths differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace

double mse_selected(std::span<const Anchor> anchors, std::span<const double> truth) {
    if (anchors.empty()) {
        throw Error(ErrorCode::no_anchors, kModule, "anchor-restricted MSE needs at least one anchor");
    }
    double sum = 0.0;
    for (const Anchor& a : anchors) {
        if (a.index >= truth.size()) {
            throw Error(ErrorCode::out_of_range, kModule, "anchor index beyond truth series");
        }
        const double e = a.value - truth[a.index];
        sum += e * e;
    }
    return sum / static_cast<double>(anchors.size());
}

double mse_selected(const BaselineEstimate& estimate, std::span<const double> truth) {
    require_same_length(estimate.baseline.size(), truth.size());
    return mse_selected(estimate.anchors, truth);
}

double mse_full(std::span<const double> estimated, std::span<const double> truth) {
    require_same_length(estimated.size(), truth.size());
    if (truth.empty()) {
        throw Error(ErrorCode::invalid_length, kModule, "empty series");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double e = estimated[i] - truth[i];
        sum += e * e;
    }
    return sum / static_cast<double>(truth.size());
}

ErrorSets fa_md_sets(std::span<const double> s, std::span<const double> b_true, std::span<const double> b_hat,
                     double threshold_S) {
    require_same_length(s.size(), b_true.size());
    require_same_length(s.size(), b_hat.size());
    ErrorSets out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double truth = b_true[i] + threshold_S;
        const double est = b_hat[i] + threshold_S;
        if (est < s[i] && s[i] <= truth) {
            out.false_alarms.push_back(i);
        } else if (truth < s[i] && s[i] <= est) {
            out.missed_detections.push_back(i);
        }
    }
    if (!s.empty()) {
        const auto n = static_cast<double>(s.size());
        out.p_fa = static_cast<double>(out.false_alarms.size()) / n;
        out.p_md = static_cast<double>(out.missed_detections.size()) / n;
    }
    return out;
}

ErrorSets field_error_sets(std::span<const double> s, std::span<const double> b_hat, double threshold_S) {
    const std::vector<double> zero(s.size(), 0.0);
    return fa_md_sets(s, b_hat, zero, threshold_S);
}

std::map<std::size_t, double> normalized_histogram(std::span<const std::size_t> distances) {
    std::map<std::size_t, double> hist;
    for (std::size_t d : distances) {
        hist[d] += 1.0;
    }
    for (auto& [d, f] : hist) {
        f /= static_cast<double>(distances.size());
    }
    return hist;
}

DistanceReport distance_to_wet(std::span<const double> s, std::span<const double> b_true,
                               std::span<const double> b_hat, double threshold_S,
                               std::span<const std::size_t> indices, WetCondition condition) {
    require_same_length(s.size(), b_true.size());
    require_same_length(s.size(), b_hat.size());
    const std::size_t n = s.size();
    const double offset = condition == WetCondition::with_offset ? threshold_S : 0.0;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    // Nearest agreed-wet sample at or before / at or after each index.
    std::vector<std::size_t> before(n, none);
    std::vector<std::size_t> after(n, none);
    auto wet = [&](std::size_t j) { return s[j] > b_true[j] + offset && s[j] > b_hat[j] + offset; };
    std::size_t last = none;
    for (std::size_t j = 0; j < n; ++j) {
        if (wet(j)) {
            last = j;
        }
        before[j] = last;
    }
    if (last == none) {
        throw Error(ErrorCode::no_wet_phase, kModule, "no sample is wet under both thresholds");
    }
    std::size_t next = none;
    for (std::size_t j = n; j-- > 0;) {
        if (wet(j)) {
            next = j;
        }
        after[j] = next;
    }

    DistanceReport report;
    report.distances.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= n) {
            throw Error(ErrorCode::out_of_range, kModule, "query index beyond series");
        }
        std::size_t d = none;
        if (before[i] != none) {
            d = i - before[i];
        }
        if (after[i] != none) {
            d = std::min(d, after[i] - i);
        }
        report.distances.push_back(d);
    }
    report.histogram = normalized_histogram(report.distances);
    return report;
}

EvalReport evaluate(const model::SyntheticScene& scene, const BaselineEstimate& estimate, double threshold_S) {
    const auto s = scene.s.values();
    const auto b = scene.b.values();
    const auto b_hat = estimate.baseline.values();

    EvalReport report;
    report.threshold_S = threshold_S;
    report.n_anchors = estimate.anchors.size();
    report.mse_selected = mse_selected(estimate, b);
    report.mse_full = mse_full(b_hat, b);

    const ErrorSets sets = fa_md_sets(s, b, b_hat, threshold_S);
    report.p_fa = sets.p_fa;
    report.p_md = sets.p_md;

    std::vector<std::size_t> errors;
    errors.reserve(sets.false_alarms.size() + sets.missed_detections.size());
    std::merge(sets.false_alarms.begin(), sets.false_alarms.end(), sets.missed_detections.begin(),
               sets.missed_detections.end(), std::back_inserter(errors));
    try {
        report.d_histogram = distance_to_wet(s, b, b_hat, threshold_S, errors).histogram;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::no_wet_phase) {
            throw;
        }
        report.wet_phase_found = false;
    }
    return report;
}

} // namespace wetbase::eval
