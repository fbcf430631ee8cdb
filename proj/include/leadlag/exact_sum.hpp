// leadlag/exact_sum.hpp
// Correctly rounded floating-point summation (Shewchuk partials, same
// algorithm as Python's math.fsum). The result does not depend on the
// order in which terms are added, which the estimator identity tests
// rely on.
#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace leadlag {

class ExactSum {
 public:
  void add(double x) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < partials_.size(); ++k) {
      double y = partials_[k];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[i++] = lo;
      x = hi;
    }
    partials_.resize(i);
    partials_.push_back(x);
  }

  // Round the exact value to the nearest double (half-even across partials).
  double value() const {
    double hi = 0.0;
    std::size_t n = partials_.size();
    if (n > 0) {
      hi = partials_[--n];
      double lo = 0.0;
      while (n > 0) {
        const double x = hi;
        const double y = partials_[--n];
        hi = x + y;
        const double yr = hi - x;
        lo = y - yr;
        if (lo != 0.0) break;
      }
      if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) ||
                    (lo > 0.0 && partials_[n - 1] > 0.0))) {
        const double y = lo * 2.0;
        const double x = hi + y;
        if (y == x - hi) hi = x;
      }
    }
    return hi;
  }

  void reset() { partials_.clear(); }

 private:
  std::vector<double> partials_;
};

inline double exact_sum(const std::vector<double>& terms) {
  ExactSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

}  // namespace leadlag
