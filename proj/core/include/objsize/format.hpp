#pragma once

// Number formatting shared by the CLI and the report emitters: reals carry
// 6 significant digits, integers print exactly.

#include <cstdint>
#include <cstdio>
#include <string>

namespace objsize {

inline std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

inline std::string format_int(std::int64_t value) {
  return std::to_string(value);
}

}  // namespace objsize
