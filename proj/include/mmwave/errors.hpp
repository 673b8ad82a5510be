#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmwave {

enum class ErrorCode {
  Domain,
  BelowReferenceDistance,
  OutOfValidity,
  EmptyInput,
  InsufficientBeams,
  DegenerateFit,
  Unidentifiable,
  OutOfRange,
  Format,
  Usage,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception. The code lets
/// callers (the CLI in particular) distinguish usage mistakes from domain
/// violations without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mmwave
