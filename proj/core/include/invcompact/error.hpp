#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invcompact {

enum class ErrorCode {
    InvalidArgument,
    ShapeMismatch,
    ZeroPivot,
    NoConvergence,
    PostBreakingTime,
    NonFinite,
    FrameSingularity,
    ZeroState,
    StepCountMismatch,
    ConfigInvalid,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries an ErrorCode so callers (and
/// tests) can branch on the kind without parsing messages.  `index()` holds the
/// offending node or pivot row where one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

} // namespace invcompact
