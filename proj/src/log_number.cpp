#include "carleman/log_number.hpp"

#include <cmath>
#include <cstdio>

#include "carleman/errors.hpp"

namespace carleman {

LogNumber LogNumber::from_log(double log_value) {
  if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity()) {
    throw DomainError("LogNumber: logarithm must be finite");
  }
  LogNumber r;
  if (log_value == -std::numeric_limits<double>::infinity()) return r;
  r.log_ = log_value;
  r.zero_ = false;
  return r;
}

LogNumber LogNumber::from_value(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("LogNumber: value must be finite and nonnegative");
  }
  if (value == 0.0) return LogNumber();
  return from_log(std::log(value));
}

double LogNumber::log10_value() const { return log_value() / std::log(10.0); }

double LogNumber::to_double() const {
  if (zero_) return 0.0;
  if (!representable()) {
    throw NotRepresentable("LogNumber: log value " + std::to_string(log_) +
                           " outside the convertible range [-700, 700]");
  }
  return std::exp(log_);
}

LogNumber LogNumber::pow(double exponent) const {
  if (zero_) {
    if (exponent > 0.0) return LogNumber();
    if (exponent == 0.0) return one();
    throw DomainError("LogNumber: zero raised to a negative power");
  }
  return from_log(log_ * exponent);
}

LogNumber operator*(LogNumber a, LogNumber b) {
  if (a.zero_ || b.zero_) return LogNumber();
  return LogNumber::from_log(a.log_ + b.log_);
}

LogNumber operator/(LogNumber a, LogNumber b) {
  if (b.zero_) throw DomainError("LogNumber: division by zero");
  if (a.zero_) return LogNumber();
  return LogNumber::from_log(a.log_ - b.log_);
}

LogNumber operator+(LogNumber a, LogNumber b) {
  if (a.zero_) return b;
  if (b.zero_) return a;
  const double hi = std::max(a.log_, b.log_);
  const double lo = std::min(a.log_, b.log_);
  return LogNumber::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogNumber max(LogNumber a, LogNumber b) { return a < b ? b : a; }

std::string LogNumber::to_string(int digits) const {
  char buf[64];
  if (zero_) return "0";
  if (std::abs(log10_value()) < 300.0) {
    std::snprintf(buf, sizeof buf, "%.*e", digits, std::exp(log_));
  } else {
    std::snprintf(buf, sizeof buf, "10^%.*f", digits, log10_value());
  }
  return buf;
}

}  // namespace carleman
