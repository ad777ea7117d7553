// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

/// @file comparators.hpp
/// @brief Reference baseline estimators: airPLS and polynomial quantile regression.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wetbase::comparators {

struct AirPlsConfig {
    double lambda = 125577.0;
    std::size_t max_iter = 15;
    int order = 2;
    /// Stop once the summed magnitude of negative residuals falls below
    /// tolerance * sum|y|. Zero runs all max_iter iterations.
    double tolerance = 0.001;

    void validate() const;
};

struct QuantRegConfig {
    int degree = 4;
    double quantile = 0.05;
    std::size_t max_iter = 100;
    double coef_tolerance = 1e-8;

    void validate() const;
};

struct QuantRegResult {
    std::vector<double> fit;
    std::vector<double> coefficients; // monomials in x on [-1, 1]
    double loss = 0.0;                // pinball loss of the returned fit
    std::size_t iterations = 0;
    bool converged = false;
};

/// Solves (W + lambda D'D) z = W y where D is the order-th difference
/// operator, using a banded Cholesky factorisation (bandwidth = order).
/// Throws Error(singular_system) when the system is not positive definite.
[[nodiscard]] std::vector<double> whittaker_smooth(std::span<const double> y, std::span<const double> weights,
                                                   double lambda, int order);

/// Adaptive iteratively reweighted penalized least squares baseline.
[[nodiscard]] std::vector<double> airpls(std::span<const double> y, const AirPlsConfig& config = {});

/// Pinball loss sum_i rho_tau(y_i - fit_i).
[[nodiscard]] double pinball_loss(std::span<const double> y, std::span<const double> fit, double quantile);

/// Global polynomial quantile fit by IRLS on the pinball loss, with a final
/// vertex refinement through the degree + 1 best-fitting samples. When IRLS
/// does not converge within max_iter the best iterate is returned with
/// converged = false.
[[nodiscard]] QuantRegResult quantile_poly(std::span<const double> y, const QuantRegConfig& config = {});

} // namespace wetbase::comparators
