#include "fsimple/format.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "fsimple/errors.hpp"

namespace fsimple {

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fmt_fixed(double x, int digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  if (b != e && *b == '+') ++b;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e || text.empty())
    throw InvalidArgument("not a number: '" + text + "'");
  return v;
}

}  // namespace fsimple
