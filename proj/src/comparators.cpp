// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/comparators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "wetbase/error.hpp"

namespace wetbase::comparators {

namespace {

constexpr const char* kModule = "comparators";

std::span<const double> difference_stencil(int order) {
    static constexpr std::array<double, 2> first{-1.0, 1.0};
    static constexpr std::array<double, 3> second{1.0, -2.0, 1.0};
    return order == 1 ? std::span<const double>(first) : std::span<const double>(second);
}

/// Symmetric band matrix: band[i * (p + 1) + k] = A(i, i + k), k <= p.
class SymmetricBand {
public:
    SymmetricBand(std::size_t n, std::size_t p) : n_(n), p_(p), data_(n * (p + 1), 0.0) {}

    double& at(std::size_t i, std::size_t k) { return data_[i * (p_ + 1) + k]; }
    [[nodiscard]] double at(std::size_t i, std::size_t k) const { return data_[i * (p_ + 1) + k]; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t bandwidth() const noexcept { return p_; }

private:
    std::size_t n_;
    std::size_t p_;
    std::vector<double> data_;
};

/// In-place banded Cholesky, then forward/back substitution.
/// lower(i, k) stores L(i, i - k).
std::vector<double> solve_banded_spd(const SymmetricBand& a, std::span<const double> rhs) {
    const std::size_t n = a.size();
    const std::size_t p = a.bandwidth();
    std::vector<double> lower(n * (p + 1), 0.0);
    auto l = [&](std::size_t i, std::size_t j) -> double& { return lower[i * (p + 1) + (i - j)]; };

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = i >= p ? i - p : 0;
        for (std::size_t j = j0; j <= i; ++j) {
            double sum = a.at(j, i - j);
            for (std::size_t k = j0; k < j; ++k) {
                sum -= l(i, k) * l(j, k);
            }
            if (i == j) {
                if (!(sum > 0.0) || !std::isfinite(sum)) {
                    throw Error(ErrorCode::singular_system, kModule,
                                "penalized system is not positive definite at row " + std::to_string(i));
                }
                l(i, i) = std::sqrt(sum);
            } else {
                l(i, j) = sum / l(j, j);
            }
        }
    }

    std::vector<double> x(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = i >= p ? i - p : 0;
        for (std::size_t j = j0; j < i; ++j) {
            x[i] -= l(i, j) * x[j];
        }
        x[i] /= l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t j1 = std::min(n - 1, i + p);
        for (std::size_t j = i + 1; j <= j1; ++j) {
            x[i] -= l(j, i) * x[j];
        }
        x[i] /= l(i, i);
    }
    return x;
}

double rho(double r, double tau) { return r >= 0.0 ? tau * r : (tau - 1.0) * r; }

Eigen::MatrixXd vandermonde(std::size_t n, int degree) {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), degree + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        double power = 1.0;
        for (int k = 0; k <= degree; ++k) {
            x(static_cast<Eigen::Index>(i), k) = power;
            power *= t;
        }
    }
    return x;
}

Eigen::VectorXd weighted_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& w) {
    const Eigen::VectorXd sw = w.array().sqrt();
    const Eigen::MatrixXd xw = sw.asDiagonal() * x;
    const Eigen::VectorXd yw = sw.cwiseProduct(y);
    return xw.colPivHouseholderQr().solve(yw);
}

} // namespace

void AirPlsConfig::validate() const {
    if (!(lambda > 0.0)) {
        throw Error(ErrorCode::invalid_params, kModule, "airPLS lambda must be > 0");
    }
    if (max_iter < 1) {
        throw Error(ErrorCode::invalid_params, kModule, "airPLS max_iter must be >= 1");
    }
    if (order != 1 && order != 2) {
        throw Error(ErrorCode::invalid_params, kModule, "airPLS order must be 1 or 2");
    }
    if (!(tolerance >= 0.0)) {
        throw Error(ErrorCode::invalid_params, kModule, "airPLS tolerance must be >= 0");
    }
}

void QuantRegConfig::validate() const {
    if (!(quantile > 0.0 && quantile < 1.0)) {
        throw Error(ErrorCode::invalid_params, kModule, "quantile must lie in (0, 1)");
    }
    if (degree < 0) {
        throw Error(ErrorCode::invalid_params, kModule, "polynomial degree must be >= 0");
    }
    if (max_iter < 1) {
        throw Error(ErrorCode::invalid_params, kModule, "quantile max_iter must be >= 1");
    }
}

std::vector<double> whittaker_smooth(std::span<const double> y, std::span<const double> weights, double lambda,
                                     int order) {
    if (order != 1 && order != 2) {
        throw Error(ErrorCode::invalid_params, kModule, "difference order must be 1 or 2");
    }
    if (weights.size() != y.size()) {
        throw Error(ErrorCode::length_mismatch, kModule, "weights and signal lengths differ");
    }
    const auto p = static_cast<std::size_t>(order);
    const std::size_t n = y.size();
    if (n < p + 2) {
        throw Error(ErrorCode::singular_system, kModule,
                    "signal of length " + std::to_string(n) + " is too short for difference order " +
                        std::to_string(order));
    }

    SymmetricBand a(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        a.at(i, 0) = weights[i];
    }
    const auto c = difference_stencil(order);
    for (std::size_t r = 0; r + p < n; ++r) {
        for (std::size_t u = 0; u <= p; ++u) {
            for (std::size_t v = u; v <= p; ++v) {
                a.at(r + u, v - u) += lambda * c[u] * c[v];
            }
        }
    }
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = weights[i] * y[i];
    }
    return solve_banded_spd(a, rhs);
}

std::vector<double> airpls(std::span<const double> y, const AirPlsConfig& config) {
    config.validate();
    const std::size_t n = y.size();
    std::vector<double> w(n, 1.0);
    const double y_l1 = std::accumulate(y.begin(), y.end(), 0.0, [](double acc, double v) { return acc + std::abs(v); });

    std::vector<double> z;
    for (std::size_t it = 1; it <= config.max_iter; ++it) {
        z = whittaker_smooth(y, w, config.lambda, config.order);

        double dssn = 0.0;
        double least_negative = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const double d = y[i] - z[i];
            if (d < 0.0) {
                dssn -= d;
                least_negative = std::max(least_negative, d);
            }
        }
        if (dssn == 0.0 || dssn < config.tolerance * y_l1 || it == config.max_iter) {
            break;
        }
        const auto scale = static_cast<double>(it);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = y[i] - z[i];
            w[i] = d >= 0.0 ? 0.0 : std::exp(scale * (-d) / dssn);
        }
        w.front() = std::exp(scale * least_negative / dssn);
        w.back() = w.front();
    }
    return z;
}

double pinball_loss(std::span<const double> y, std::span<const double> fit, double quantile) {
    if (y.size() != fit.size()) {
        throw Error(ErrorCode::length_mismatch, kModule, "signal and fit lengths differ");
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        loss += rho(y[i] - fit[i], quantile);
    }
    return loss;
}

QuantRegResult quantile_poly(std::span<const double> y, const QuantRegConfig& config) {
    config.validate();
    const std::size_t n = y.size();
    const auto terms = static_cast<std::size_t>(config.degree) + 1;
    if (n <= terms) {
        throw Error(ErrorCode::invalid_length, kModule,
                    "need more than degree + 1 = " + std::to_string(terms) + " samples");
    }
    const double tau = config.quantile;
    const Eigen::MatrixXd x = vandermonde(n, config.degree);
    const Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));

    const double scale = std::max(1.0, yv.cwiseAbs().maxCoeff());
    const double floor = 1e-9 * scale;

    auto loss_of = [&](const Eigen::VectorXd& beta) {
        const Eigen::VectorXd r = yv - x * beta;
        double loss = 0.0;
        for (Eigen::Index i = 0; i < r.size(); ++i) {
            loss += rho(r(i), tau);
        }
        return loss;
    };

    Eigen::VectorXd beta = weighted_fit(x, yv, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)));
    Eigen::VectorXd best = beta;
    double best_loss = loss_of(beta);
    QuantRegResult result;

    for (std::size_t it = 1; it <= config.max_iter; ++it) {
        const Eigen::VectorXd r = yv - x * beta;
        Eigen::VectorXd w(r.size());
        for (Eigen::Index i = 0; i < r.size(); ++i) {
            w(i) = (r(i) >= 0.0 ? tau : 1.0 - tau) / std::max(std::abs(r(i)), floor);
        }
        const Eigen::VectorXd next = weighted_fit(x, yv, w);
        const double change = (next - beta).cwiseAbs().maxCoeff();
        beta = next;
        result.iterations = it;
        const double loss = loss_of(beta);
        if (loss < best_loss) {
            best_loss = loss;
            best = beta;
        }
        if (change < config.coef_tolerance) {
            result.converged = true;
            break;
        }
    }

    // Optimal pinball fits interpolate degree + 1 samples; refine towards
    // that vertex through the samples closest to the current fit.
    {
        const Eigen::VectorXd r = yv - x * best;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(terms), order.end(),
                          [&](std::size_t a, std::size_t b) {
                              return std::abs(r(static_cast<Eigen::Index>(a))) < std::abs(r(static_cast<Eigen::Index>(b)));
                          });
        Eigen::MatrixXd xs(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(terms));
        Eigen::VectorXd ys(static_cast<Eigen::Index>(terms));
        for (std::size_t k = 0; k < terms; ++k) {
            xs.row(static_cast<Eigen::Index>(k)) = x.row(static_cast<Eigen::Index>(order[k]));
            ys(static_cast<Eigen::Index>(k)) = yv(static_cast<Eigen::Index>(order[k]));
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(xs);
        if (lu.isInvertible()) {
            const Eigen::VectorXd vertex = lu.solve(ys);
            const double loss = loss_of(vertex);
            if (loss <= best_loss) {
                best_loss = loss;
                best = vertex;
            }
        }
    }

    const Eigen::VectorXd fit = x * best;
    result.fit.assign(fit.data(), fit.data() + fit.size());
    result.coefficients.assign(best.data(), best.data() + best.size());
    result.loss = best_loss;
    return result;
}

} // namespace wetbase::comparators
