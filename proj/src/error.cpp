// Copyright 2026 The wetbase Authors
// SPDX-License-Identifier: Apache-2.0

#include "wetbase/error.hpp"

namespace wetbase {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::invalid_length: return "invalid-length";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::no_anchors: return "no-anchors";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::singular_system: return "singular-system";
    case ErrorCode::no_wet_phase: return "no-wet-phase";
    case ErrorCode::missing_file: return "missing-file";
    case ErrorCode::malformed_row: return "malformed-row";
    case ErrorCode::non_uniform_sampling: return "non-uniform-sampling";
    }
    return "unknown";
}

Error::Error(ErrorCode code, std::string_view module, const std::string& message)
    : std::runtime_error(std::string(module) + ": " + message + " [" + std::string(to_string(code)) + "]"),
      code_(code) {}

} // namespace wetbase
