#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linarr {

enum class ErrorCode {
    ParseError,
    ZeroDirection,
    DimensionMismatch,
    DuplicateLine,
    WrongDimension,
    ResolutionTooCoarse,
    NonGenericDirection,
    InvalidProfile,
    InvalidGraph,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. `path` locates the
/// offending input field (e.g. "lines[2].direction") when one is known.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string path = {})
        : std::runtime_error(message), code_(code), path_(std::move(path)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

}  // namespace linarr
