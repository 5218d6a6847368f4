#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace hartogs {

// CSV number format: '.' decimal separator always (to_chars is
// locale-free), scientific notation for small nonzero magnitudes.
inline std::string format_double(double v) {
  char buf[64];
  const bool sci = v != 0.0 && std::abs(v) < 1e-4;
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           sci ? std::chars_format::scientific : std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace hartogs
