// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file signal_model.hpp
/// @brief Synthetic leaf-wetness signals with ground truth.
///
/// A scene is the sum s = h + b + n of a Gaussian-mixture wetness component h,
/// a smoothed +/- step random-walk baseline b and i.i.d. Gaussian noise n.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "wetbase/signal.hpp"

namespace wetbase::model {

/// Positive-valued random draw specification.
struct Distribution {
    enum class Kind { constant, lognormal, uniform };

    Kind kind = Kind::constant;
    double a = 1.0; ///< constant value, lognormal median, or uniform lower bound
    double b = 0.0; ///< lognormal sigma of log, or uniform upper bound

    static Distribution constant(double value) { return {Kind::constant, value, 0.0}; }
    static Distribution lognormal(double median, double sigma_log) { return {Kind::lognormal, median, sigma_log}; }
    static Distribution uniform(double lo, double hi) { return {Kind::uniform, lo, hi}; }

    /// True when every draw is guaranteed to be > 0.
    [[nodiscard]] bool strictly_positive() const noexcept;
    [[nodiscard]] double draw(std::mt19937_64& rng) const;
};

struct ModelParams {
    std::size_t n_samples = 9858;
    Distribution peak_amplitude = Distribution::lognormal(3.0, 0.8); // mV
    Distribution peak_width = Distribution::lognormal(4.0, 0.5);     // samples
    Distribution peak_gap = Distribution::lognormal(96.0, 0.7);      // samples
    double walk_step = 0.1;                                          // mV
    std::size_t walk_smooth_len = 50;
    double noise_power = 0.01; // mV^2
    std::uint64_t seed = 0;

    /// Throws Error(invalid_params) on violated invariants.
    void validate() const;

    /// Same parameters with the wetness component switched off.
    [[nodiscard]] ModelParams without_peaks() const;
};

struct Peak {
    double center;    // sample index, may be fractional
    double amplitude; // mV
    double width;     // standard deviation in samples
};

struct SyntheticScene {
    Signal h;
    Signal b;
    Signal n;
    Signal s;
    std::uint64_t seed;
};

/// Independent generator stream for one scene component. Peaks, walk and
/// noise draw from separate streams so that disabling one component leaves
/// the others unchanged.
enum class Stream : std::uint32_t { peaks = 1, walk = 2, noise = 3 };
[[nodiscard]] std::mt19937_64 make_rng(std::uint64_t seed, Stream stream);

[[nodiscard]] std::vector<Peak> draw_peaks(const ModelParams& params, std::mt19937_64& rng);

/// h(i) = sum_k A_k exp(-(i - c_k)^2 / (2 w_k^2)) for i in [0, n).
[[nodiscard]] std::vector<double> gaussian_mixture(std::size_t n, std::span<const Peak> peaks);

[[nodiscard]] Signal generate_peaks(const ModelParams& params, std::mt19937_64& rng);

/// Cumulative sum of the given +1/-1 signs scaled by step; element i holds
/// the sum of the first i + 1 steps.
[[nodiscard]] std::vector<double> random_walk(std::span<const int> signs, double step);

[[nodiscard]] Signal generate_baseline(const ModelParams& params, std::mt19937_64& rng);

[[nodiscard]] SyntheticScene generate_scene(const ModelParams& params);

} // namespace wetbase::model
