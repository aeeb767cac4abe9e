#include "carleman/special.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "carleman/errors.hpp"
#include "carleman/summation.hpp"

namespace carleman {

double gamma_half(int twice_x) {
  if (twice_x < 1) throw DomainError("gamma_half: argument must be positive");
  // Start from Gamma(1) or Gamma(1/2) and climb in unit steps.
  double value = (twice_x % 2 == 0) ? 1.0 : std::sqrt(kPi);
  for (int k = (twice_x % 2 == 0) ? 2 : 1; k + 2 <= twice_x; k += 2) {
    value *= 0.5 * k;
  }
  return value;
}

double log_gamma_half(int twice_x) {
  if (twice_x < 1) throw DomainError("log_gamma_half: argument must be positive");
  double value = (twice_x % 2 == 0) ? 0.0 : 0.5 * std::log(kPi);
  for (int k = (twice_x % 2 == 0) ? 2 : 1; k + 2 <= twice_x; k += 2) {
    value += std::log(0.5 * k);
  }
  return value;
}

double surface_area(int n) {
  if (n < 2) throw InvalidDimension("surface_area: dimension must be >= 2, got " + std::to_string(n));
  return 2.0 * std::pow(kPi, 0.5 * n) / gamma_half(n);
}

double log_surface_area(int n) {
  if (n < 2) throw InvalidDimension("surface_area: dimension must be >= 2, got " + std::to_string(n));
  return std::log(2.0) + 0.5 * n * std::log(kPi) - log_gamma_half(n);
}

double gamma_ratio(int n) {
  if (n < 3) throw InvalidDimension("gamma_ratio: dimension must be >= 3, got " + std::to_string(n));
  return n * surface_area(n - 1) / ((n - 1) * surface_area(n));
}

namespace {

void check_bessel_args(double nu, double x) {
  if (!(nu >= 0.0 && nu <= kBesselMaxOrder)) {
    throw RangeError("bessel_j: order outside [0, 60]");
  }
  if (!(x >= 0.0 && x <= kBesselMaxArgument)) {
    throw RangeError("bessel_j: argument outside [0, 50]");
  }
}

// Miller's algorithm: recur J_{nu+k} downward from an order well above x,
// then normalize with (x/2)^nu = sum_j (nu + 2j) Gamma(nu + j) / j! J_{nu+2j}(x).
double bessel_j_miller(double nu, double x) {
  const int top = 2 * (static_cast<int>(x) + 40 + static_cast<int>(nu) / 2);
  std::vector<double> f(top + 2, 0.0);
  f[top + 1] = 0.0;
  f[top] = 1e-300;
  for (int k = top; k >= 1; --k) {
    f[k - 1] = 2.0 * (nu + k) / x * f[k] - f[k + 1];
    if (std::abs(f[k - 1]) > 1e250) {
      for (int j = k - 1; j <= top; ++j) f[j] *= 1e-250;
    }
  }
  // Weights relative to Gamma(nu + 1): 1 for j = 0, (nu + 2j) r_j after,
  // with r_j = Gamma(nu + j) / (Gamma(nu + 1) j!), r_1 = 1.
  const double log_scale = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
  NeumaierSum norm;
  norm.add(f[0]);
  double r = 1.0;
  for (int j = 1; 2 * j <= top; ++j) {
    if (j > 1) r *= (nu + j - 1) / j;
    norm.add((nu + 2.0 * j) * r * f[2 * j]);
  }
  return f[0] * std::exp(log_scale) / norm.value();
}

}  // namespace

double bessel_j_series(double nu, double x, int terms) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  const double log_lead = nu * std::log(half) - std::lgamma(nu + 1.0);
  NeumaierSum sum;
  double term = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term *= -half * half / (k * (nu + k));
    sum.add(term);
    if (std::abs(term) < 1e-300) break;
  }
  return std::exp(log_lead) * sum.value();
}

double bessel_j(double nu, double x) {
  check_bessel_args(nu, x);
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= kBesselSeriesCutoff) return bessel_j_series(nu, x);
  return bessel_j_miller(nu, x);
}

double bessel_first_root(double nu) {
  if (!(nu >= 0.0 && nu <= kBesselRootMaxOrder)) {
    throw RangeError("bessel_first_root: order outside [0, 20]");
  }
  // j_nu > nu, and J_nu > 0 on (0, j_nu).
  constexpr double step = 0.05;
  double lo = std::max(nu, step);
  double f_lo = bessel_j(nu, lo);
  double hi = lo;
  double f_hi = f_lo;
  while (true) {
    hi = lo + step;
    if (hi > kBesselMaxArgument) throw RangeError("bessel_first_root: no sign change below 50");
    f_hi = bessel_j(nu, hi);
    if ((f_lo > 0.0) != (f_hi > 0.0)) break;
    lo = hi;
    f_lo = f_hi;
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bessel_j(nu, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace carleman
