#pragma once

// Special functions behind the explicit constants: unit-sphere areas,
// Gamma at integers and half-integers, Bessel J_nu and its first zero.

namespace carleman {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Gamma(k/2) for integer k >= 1, by the exact recursions
// Gamma(1) = 1, Gamma(1/2) = sqrt(pi), Gamma(x + 1) = x Gamma(x).
double gamma_half(int twice_x);
double log_gamma_half(int twice_x);

// Area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
// Throws InvalidDimension for n < 2.
double surface_area(int n);
double log_surface_area(int n);

// n * omega_{n-1} / ((n-1) * omega_n); the harmonic gradient-estimate factor.
double gamma_ratio(int n);

inline constexpr double kBesselMaxArgument = 50.0;
inline constexpr double kBesselMaxOrder = 60.0;
inline constexpr double kBesselSeriesCutoff = 12.0;

// J_nu(x) for 0 <= nu <= 60 and 0 <= x <= 50.
// Power series (compensated) for x <= 12, Miller backward recurrence above.
double bessel_j(double nu, double x);

// Power-series branch alone; exposed for cross-checks.
double bessel_j_series(double nu, double x, int terms = 60);

inline constexpr double kBesselRootMaxOrder = 20.0;

// First positive zero j_nu of J_nu, 0 <= nu <= 20, absolute accuracy 1e-10.
double bessel_first_root(double nu);

}  // namespace carleman
