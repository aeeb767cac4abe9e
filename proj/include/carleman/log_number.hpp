#pragma once

#include <compare>
#include <limits>
#include <string>

namespace carleman {

// A nonnegative real stored by its natural logarithm. The explicit constants
// reach exp(2^{2n+11} ...), so everything past the constant tables stays in
// this form until the final comparison.
class LogNumber {
 public:
  static constexpr double kMaxConvertibleLog = 700.0;

  // Exact zero.
  constexpr LogNumber() = default;

  static LogNumber zero() { return LogNumber(); }
  static LogNumber one() { return from_log(0.0); }
  static LogNumber from_log(double log_value);
  // Throws DomainError for negative or non-finite input; 0 maps to zero().
  static LogNumber from_value(double value);
  // e^{exponent}; exponent may be far outside double range of e^x.
  static LogNumber exp(double exponent) { return from_log(exponent); }

  bool is_zero() const { return zero_; }
  // Natural log; -inf for zero.
  double log_value() const {
    return zero_ ? -std::numeric_limits<double>::infinity() : log_;
  }
  double log10_value() const;
  bool representable() const {
    return zero_ || (log_ <= kMaxConvertibleLog && log_ >= -kMaxConvertibleLog);
  }
  // Throws NotRepresentable when |log| > 700.
  double to_double() const;

  LogNumber pow(double exponent) const;
  LogNumber root(double degree) const { return pow(1.0 / degree); }

  friend LogNumber operator*(LogNumber a, LogNumber b);
  friend LogNumber operator/(LogNumber a, LogNumber b);
  // Stable log-sum-exp.
  friend LogNumber operator+(LogNumber a, LogNumber b);
  LogNumber& operator*=(LogNumber o) { return *this = *this * o; }
  LogNumber& operator+=(LogNumber o) { return *this = *this + o; }

  friend LogNumber operator*(LogNumber a, double b) { return a * from_value(b); }
  friend LogNumber operator*(double a, LogNumber b) { return from_value(a) * b; }

  friend std::partial_ordering operator<=>(const LogNumber& a, const LogNumber& b) {
    return a.log_value() <=> b.log_value();
  }
  friend bool operator==(const LogNumber& a, const LogNumber& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.log_ == b.log_);
  }

  // Scientific notation when representable, otherwise "10^<log10>".
  std::string to_string(int digits = 12) const;

 private:
  double log_ = 0.0;
  bool zero_ = true;
};

LogNumber max(LogNumber a, LogNumber b);

}  // namespace carleman
