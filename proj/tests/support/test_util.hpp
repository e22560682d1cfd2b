#pragma once

#include <cmath>

namespace testutil {

inline double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

}  // namespace testutil
