// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wetbase/error.hpp"

namespace wetbase {

Signal::Signal(std::vector<double> samples, double sample_period)
    : samples_(std::move(samples)), period_(sample_period) {
    if (samples_.empty()) {
        throw Error(ErrorCode::invalid_params, "signal", "empty sample series");
    }
    if (!(period_ > 0.0) || !std::isfinite(period_)) {
        throw Error(ErrorCode::invalid_params, "signal", "sample period must be positive");
    }
    const auto bad = std::find_if(samples_.begin(), samples_.end(), [](double v) { return !std::isfinite(v); });
    if (bad != samples_.end()) {
        throw Error(ErrorCode::invalid_params, "signal",
                    "non-finite sample at index " + std::to_string(bad - samples_.begin()));
    }
}

} // namespace wetbase
