// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wetbase {

enum class ErrorCode {
    invalid_params,
    invalid_length,
    out_of_range,
    no_anchors,
    length_mismatch,
    singular_system,
    no_wet_phase,
    missing_file,
    malformed_row,
    non_uniform_sampling,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. what() is prefixed with the
/// originating module, e.g. "estimator: no anchors selected".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string_view module, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wetbase
