#ifndef SUBRAD_FORMAT_HPP
#define SUBRAD_FORMAT_HPP

#include <cstdio>
#include <string>

namespace subrad {

/// Numeric output convention for CSV and summaries: 12 significant digits.
inline std::string format_g12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace subrad

#endif
