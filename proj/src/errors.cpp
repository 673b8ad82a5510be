#include "mmwave/errors.hpp"

namespace mmwave {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::BelowReferenceDistance: return "below reference distance";
    case ErrorCode::OutOfValidity: return "outside model validity";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::InsufficientBeams: return "insufficient beams";
    case ErrorCode::DegenerateFit: return "degenerate fit";
    case ErrorCode::Unidentifiable: return "unidentifiable parameter";
    case ErrorCode::OutOfRange: return "out of range";
    case ErrorCode::Format: return "format error";
    case ErrorCode::Usage: return "usage error";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mmwave
