#include "invcompact/error.hpp"

#include <string>

namespace invcompact {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PostBreakingTime: return "PostBreakingTime";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::FrameSingularity: return "FrameSingularity";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::StepCountMismatch: return "StepCountMismatch";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
    , index_(index)
{
}

} // namespace invcompact
