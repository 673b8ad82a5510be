#pragma once

#include <string>

namespace mmwave {

/// Fixed-point text, locale independent. Correctly rounded from the binary
/// value, so exact ties go to even.
std::string format_fixed(double value, int decimals);

/// Rounds to the given number of decimals in the same way format_fixed does.
double round_to(double value, int decimals);

}  // namespace mmwave
