#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>

namespace pnt::csv {

/// Fixed six decimals, C-locale, correctly rounded (ties to even on the
/// exact binary value). "-0.000000" is printed as "0.000000".
inline std::string fixed6(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  std::string out(buf, res.ptr);
  if (out == "-0.000000") out.erase(0, 1);
  return out;
}

/// Shortest representation that round-trips to the same double.
inline std::string exact(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

template <class... Cells>
void row(std::ostream& out, const Cells&... cells) {
  bool first = true;
  ((out << (first ? "" : ",") << cells, first = false), ...);
  out << '\n';
}

}  // namespace pnt::csv
