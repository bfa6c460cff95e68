#pragma once

#include <cstdio>
#include <string>

namespace bohr {

/// Shortest-safe decimal: 17 significant digits round-trips any double.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Compact form for human-facing summaries.
inline std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace bohr
