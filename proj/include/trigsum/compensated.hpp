#pragma once

#include <cmath>

namespace trigsum {

// Neumaier compensated accumulator. Long coefficient sums lose about three
// digits at N = 1e5 without it.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + carry; }
};

}  // namespace trigsum
