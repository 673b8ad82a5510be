#include "mmwave/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace mmwave {

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) {
    // Only reachable for huge magnitudes; fall back to the general form.
    auto [e2, ec2] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec2;
    end = e2;
  }
  std::string out(buf.data(), end);
  // "-0.000" reads badly in tables and golden files.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(out.begin());
  }
  return out;
}

double round_to(double value, int decimals) {
  const std::string text = format_fixed(value, decimals);
  return std::strtod(text.c_str(), nullptr);
}

}  // namespace mmwave
