#pragma once

#include <cmath>
#include <span>

namespace carleman {

// Neumaier's variant of Kahan summation. Order-dependent by construction,
// so every reduction in the library feeds terms in a fixed index order.
class NeumaierSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
  NeumaierSum s;
  for (double t : terms) s.add(t);
  return s.value();
}

}  // namespace carleman
