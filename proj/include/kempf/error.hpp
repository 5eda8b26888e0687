#pragma once

#include <stdexcept>
#include <string>

namespace kempf {

enum class ErrorCode {
    invalid_instance,
    invalid_argument,
    parse_error,
    mode_mismatch,
    zero_gamma,
    not_in_cone,
    wrong_mode,
    too_large,
    not_unique,
    bad_m,
    non_positive_weight,
    length_mismatch,
    non_monotone_eps,
    uniqueness_violated,
    no_stabilization,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_instance: return "InvalidInstance";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::mode_mismatch: return "ModeMismatch";
    case ErrorCode::zero_gamma: return "ZeroGamma";
    case ErrorCode::not_in_cone: return "NotInCone";
    case ErrorCode::wrong_mode: return "WrongMode";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::not_unique: return "NotUnique";
    case ErrorCode::bad_m: return "BadM";
    case ErrorCode::non_positive_weight: return "NonPositiveWeight";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::non_monotone_eps: return "NonMonotoneEps";
    case ErrorCode::uniqueness_violated: return "UniquenessViolated";
    case ErrorCode::no_stabilization: return "NoStabilization";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps them to exit status 2.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace kempf
