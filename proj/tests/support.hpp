#pragma once

#include <doctest.h>

#include <cmath>
#include <functional>

#include "mmwave/errors.hpp"

namespace mmwave::test {

inline ErrorCode error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected mmwave::Error");
  return ErrorCode::Usage;
}

}  // namespace mmwave::test

#define CHECK_ERROR(expr, expected) \
  CHECK(::mmwave::test::error_code_of([&] { (void)(expr); }) == (expected))
