#include "linarr/error.hpp"

namespace linarr {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroDirection: return "ZeroDirection";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DuplicateLine: return "DuplicateLine";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
        case ErrorCode::NonGenericDirection: return "NonGenericDirection";
        case ErrorCode::InvalidProfile: return "InvalidProfile";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace linarr
