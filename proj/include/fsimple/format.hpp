#pragma once

#include <string>

namespace fsimple {

// Shortest decimal text that reads back to the same double.
std::string fmt_double(double x);

// Fixed-point text with `digits` decimals ("%.*f").
std::string fmt_fixed(double x, int digits);

// Parses a full string as a double; throws InvalidArgument otherwise.
double parse_double(const std::string& text);

}  // namespace fsimple
