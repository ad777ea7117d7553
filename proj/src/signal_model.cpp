// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/signal_model.hpp"

#include <cmath>

#include "wetbase/error.hpp"
#include "wetbase/filters.hpp"

namespace wetbase::model {

namespace {

void require(bool condition, const char* message) {
    if (!condition) {
        throw Error(ErrorCode::invalid_params, "signal_model", message);
    }
}

} // namespace

bool Distribution::strictly_positive() const noexcept {
    switch (kind) {
    case Kind::constant: return a > 0.0 && std::isfinite(a);
    case Kind::lognormal: return a > 0.0 && std::isfinite(a) && b >= 0.0 && std::isfinite(b);
    case Kind::uniform: return a > 0.0 && b >= a && std::isfinite(b);
    }
    return false;
}

double Distribution::draw(std::mt19937_64& rng) const {
    switch (kind) {
    case Kind::constant: return a;
    case Kind::lognormal: {
        if (b == 0.0) {
            return a;
        }
        std::lognormal_distribution<double> dist(std::log(a), b);
        return dist(rng);
    }
    case Kind::uniform: {
        if (a == b) {
            return a;
        }
        std::uniform_real_distribution<double> dist(a, b);
        return dist(rng);
    }
    }
    return a;
}

void ModelParams::validate() const {
    require(n_samples >= 1, "n_samples must be >= 1");
    require(walk_step > 0.0 && std::isfinite(walk_step), "walk_step must be > 0");
    require(walk_smooth_len >= 1, "walk_smooth_len must be >= 1");
    require(noise_power >= 0.0 && std::isfinite(noise_power), "noise_power must be >= 0");
    require(peak_width.strictly_positive(), "peak width distribution can yield non-positive draws");
    require(peak_gap.strictly_positive(), "peak gap distribution can yield non-positive draws");
    require(peak_amplitude.strictly_positive(), "peak amplitude distribution can yield non-positive draws");
}

ModelParams ModelParams::without_peaks() const {
    ModelParams p = *this;
    p.peak_gap = Distribution::constant(static_cast<double>(n_samples) + 1.0);
    return p;
}

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

std::vector<Peak> draw_peaks(const ModelParams& params, std::mt19937_64& rng) {
    params.validate();
    std::vector<Peak> peaks;
    const auto n = static_cast<double>(params.n_samples);
    double center = params.peak_gap.draw(rng);
    while (center < n) {
        const double amplitude = params.peak_amplitude.draw(rng);
        const double width = params.peak_width.draw(rng);
        peaks.push_back({center, amplitude, width});
        center += params.peak_gap.draw(rng);
    }
    return peaks;
}

std::vector<double> gaussian_mixture(std::size_t n, std::span<const Peak> peaks) {
    std::vector<double> h(n, 0.0);
    for (const Peak& p : peaks) {
        const double inv = 1.0 / (2.0 * p.width * p.width);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = static_cast<double>(i) - p.center;
            h[i] += p.amplitude * std::exp(-d * d * inv);
        }
    }
    return h;
}

Signal generate_peaks(const ModelParams& params, std::mt19937_64& rng) {
    const auto peaks = draw_peaks(params, rng);
    return Signal(gaussian_mixture(params.n_samples, peaks));
}

std::vector<double> random_walk(std::span<const int> signs, double step) {
    std::vector<double> walk(signs.size());
    double level = 0.0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        level += signs[i] > 0 ? step : -step;
        walk[i] = level;
    }
    return walk;
}

Signal generate_baseline(const ModelParams& params, std::mt19937_64& rng) {
    params.validate();
    std::bernoulli_distribution coin(0.5);
    std::vector<int> signs(params.n_samples);
    for (int& s : signs) {
        s = coin(rng) ? 1 : -1;
    }
    const auto walk = random_walk(signs, params.walk_step);
    return Signal(moving_average(walk, params.walk_smooth_len));
}

SyntheticScene generate_scene(const ModelParams& params) {
    params.validate();
    auto peak_rng = make_rng(params.seed, Stream::peaks);
    auto walk_rng = make_rng(params.seed, Stream::walk);
    auto noise_rng = make_rng(params.seed, Stream::noise);

    Signal h = generate_peaks(params, peak_rng);
    Signal b = generate_baseline(params, walk_rng);

    std::vector<double> n(params.n_samples, 0.0);
    if (params.noise_power > 0.0) {
        std::normal_distribution<double> gauss(0.0, std::sqrt(params.noise_power));
        for (double& v : n) {
            v = gauss(noise_rng);
        }
    }
    std::vector<double> s(params.n_samples);
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = h[i] + b[i] + n[i];
    }
    return {std::move(h), std::move(b), Signal(std::move(n)), Signal(std::move(s)), params.seed};
}

} // namespace wetbase::model
