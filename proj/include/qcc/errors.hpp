#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

// Every failure mode surfaced by the library. The CLI maps each code to a
// distinct process exit status.
enum class ErrorCode {
    overflow = 1,
    invalid_argument,
    invalid_key,
    syntax_error,
    seed_outside_window,
    not_normalized,
    gap_discovery_failed,
    no_candidate,
    unknown_gap,
    length_mismatch,
    dimension_mismatch,
    malformed_header,
    truncated_payload,
    unsupported_maxval,
    entropy_exhausted,
    io_error,
};

inline const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_key: return "InvalidKey";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::seed_outside_window: return "SeedOutsideWindow";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::gap_discovery_failed: return "GapDiscoveryFailed";
    case ErrorCode::no_candidate: return "NoCandidate";
    case ErrorCode::unknown_gap: return "UnknownGap";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::malformed_header: return "MalformedHeader";
    case ErrorCode::truncated_payload: return "TruncatedPayload";
    case ErrorCode::unsupported_maxval: return "UnsupportedMaxval";
    case ErrorCode::entropy_exhausted: return "EntropyExhausted";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace qcc
