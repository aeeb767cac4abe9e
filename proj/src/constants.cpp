#include "carleman/constants.hpp"

#include <cmath>
#include <string>

#include "carleman/errors.hpp"
#include "carleman/special.hpp"

namespace carleman {
namespace {

const double kLog2 = std::log(2.0);

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidExponent("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
}

void require_real_dim(RealDim n, int min) {
  if (n.value < min) {
    throw InvalidDimension("dimension out of range: real dimension must be >= " +
                           std::to_string(min) + ", got " + std::to_string(n.value));
  }
}

void require_complex_dim(ComplexDim n) {
  if (n.value < 2) {
    throw InvalidDimension("dimension out of range: complex dimension must be >= 2, got " +
                           std::to_string(n.value));
  }
}

void require_nonneg(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and nonnegative");
  }
}

void require_pos(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

double clamp8(double ld) { return std::max(8.0, ld); }

// log of 8^n n^{5/2} omega_{n-1} / ((n-1)(2^n-4) omega_n^{1+1/n}) * clamp.
double log_boundary_weak(int n, double clamp) {
  return n * std::log(8.0) + 2.5 * std::log(static_cast<double>(n)) +
         log_surface_area(n - 1) - std::log(n - 1.0) - std::log(std::ldexp(1.0, n) - 4.0) -
         (1.0 + 1.0 / n) * log_surface_area(n) + std::log(clamp);
}

LogNumber delta2_core(int n, double p, double clamp) {
  const double log_value = kLog2 - std::log(p) / (n * p) +
                           (1.0 - n) / (n * p) * std::log(p - 1.0) +
                           log_boundary_weak(n, clamp) / p;
  return LogNumber::from_log(log_value);
}

// log of K^{e}; -inf when K = 0 and e > 0.
LogNumber curvature_power(double k, double e) {
  if (k == 0.0) return LogNumber::zero();
  return LogNumber::from_log(e * std::log(k));
}

}  // namespace

std::string to_string(ExponentFamily f) {
  switch (f) {
    case ExponentFamily::laplace: return "laplace";
    case ExponentFamily::section: return "section";
    case ExponentFamily::holomorphic: return "holomorphic";
  }
  return "?";
}

ExponentFamily parse_exponent_family(const std::string& s) {
  if (s == "laplace") return ExponentFamily::laplace;
  if (s == "section") return ExponentFamily::section;
  if (s == "holomorphic" || s == "holo") return ExponentFamily::holomorphic;
  throw DomainError("unknown exponent family '" + s + "'");
}

std::string to_string(ConstantMode m) {
  return m == ConstantMode::statement ? "statement" : "proof";
}
std::string to_string(PrefactorMode m) { return m == PrefactorMode::two_n ? "2n" : "4n"; }
std::string to_string(GrowthMode m) { return m == GrowthMode::printed ? "printed" : "weighted"; }
std::string to_string(SlotMode m) { return m == SlotMode::printed ? "printed" : "rederived"; }

ExponentSet exponents(ExponentFamily family, int n, double p) {
  require_p(p);
  ExponentSet e{family, n, p, 0.0, std::nullopt, true};
  switch (family) {
    case ExponentFamily::laplace:
      require_real_dim(RealDim{n}, 3);
      e.p_star = n * p / (n - 1.0);
      e.p_sharp = n * p / (n + 2.0 * p - 1.0);
      // p# > 1  <=>  p (n - 2) > n - 1, evaluated without the division.
      e.valid = p * (n - 2.0) > n - 1.0;
      break;
    case ExponentFamily::section:
      require_complex_dim(ComplexDim{n});
      e.p_star = 2.0 * n * p / (2.0 * n - 1.0);
      e.p_sharp = 2.0 * n * p / (2.0 * n + p - 1.0);
      break;
    case ExponentFamily::holomorphic:
      require_complex_dim(ComplexDim{n});
      e.p_star = 2.0 * n * p / (2.0 * n - 1.0);
      break;
  }
  return e;
}

LogNumber delta1(RealDim n, double p) {
  const ExponentSet e = exponents(ExponentFamily::laplace, n.value, p);
  if (!e.valid) {
    throw InvalidExponent("delta1: p# = " + std::to_string(*e.p_sharp) +
                          " is not > 1; need p > (n-1)/(n-2)");
  }
  const double d = n.value;
  const double ps = *e.p_sharp;
  const double log_value =
      kLog2 - 2.0 / d * log_surface_area(n.value) - std::log(d - 2.0) +
      (1.0 - 2.0 * ps / d) * (d * std::log(6.0) + std::log(ps) - std::log(3.0) - std::log(ps - 1.0)) +
      2.0 * (ps - 1.0) / d * (std::log(ps - 1.0) - std::log(d - 2.0 * ps));
  return LogNumber::from_log(log_value);
}

LogNumber delta2(RealDim n, double p, double ld) {
  require_real_dim(n, 3);
  require_p(p);
  require_nonneg(ld, "LD");
  return delta2_core(n.value, p, clamp8(ld));
}

LogNumber delta2_convex(RealDim n, double p) {
  require_real_dim(n, 3);
  require_p(p);
  // 8^n * 8 = 8^{n+1}: the convex display is the clamp at its floor.
  return delta2_core(n.value, p, 8.0);
}

LogNumber boundary_weak_constant(RealDim n, double ld) {
  require_real_dim(n, 3);
  require_nonneg(ld, "LD");
  return LogNumber::from_log(log_boundary_weak(n.value, clamp8(ld)));
}

LogNumber carleman_holo_constant(ComplexDim n, double p, double ld, bool convex) {
  require_complex_dim(n);
  require_p(p);
  require_nonneg(ld, "LD");
  const double c = n.value;
  const double delta = convex ? 8.0 : clamp8(ld);
  const double log_inner = c * std::log(64.0) + 2.5 * std::log(2.0 * c) +
                           log_surface_area(2 * n.value - 1) + std::log(delta) -
                           std::log(2.0 * c - 1.0) - std::log(std::pow(4.0, c) - 4.0) -
                           (1.0 + 1.0 / (2.0 * c)) * log_surface_area(2 * n.value);
  const double log_value = kLog2 - std::log(p) / (2.0 * c * p) +
                           (1.0 - 2.0 * c) / (2.0 * c * p) * std::log(p - 1.0) + log_inner / p;
  return LogNumber::from_log(log_value);
}

LogNumber riesz_constant(RealDim n, double p, double a) {
  require_real_dim(n, 2);
  require_p(p);
  const double d = n.value;
  if (!(a > 0.0 && a < d)) throw DomainError("riesz_constant: need 0 < a < n");
  if (!(d > p * a)) {
    throw DomainError("riesz_constant: need n > p a (target exponent np/(n-pa) undefined)");
  }
  const double log_value =
      kLog2 + (1.0 - a / d) * log_surface_area(n.value) +
      (1.0 - p * a / d) *
          (d * std::log(6.0) + std::log(p) - std::log(std::pow(2.0, a) - 1.0) - std::log(p - 1.0)) +
      (p - 1.0) * a / d * (std::log(p - 1.0) - std::log(d - p * a));
  return LogNumber::from_log(log_value);
}

double weak_type_constant(RealDim n) {
  require_real_dim(n, 2);
  return n.value * std::pow(surface_area(n.value), 1.0 - 1.0 / n.value);
}

LogNumber marcinkiewicz_constant(double n, double p, LogNumber c1, LogNumber c2) {
  if (!(n > 1.0)) throw InvalidDimension("marcinkiewicz_constant: need n > 1");
  require_p(p);
  if (c1.is_zero() || c2.is_zero()) throw DomainError("marcinkiewicz_constant: C1, C2 must be > 0");
  const double log_value = kLog2 + (1.0 - n) / (n * p) * std::log(p - 1.0) -
                           std::log(p) / (n * p) + c1.log_value() / p +
                           (1.0 - 1.0 / p) * c2.log_value();
  return LogNumber::from_log(log_value);
}

GreenBoundConstants green_bound_constants(RealDim n, double ld) {
  require_real_dim(n, 3);
  require_nonneg(ld, "LD");
  const double d = n.value;
  const double log_w = log_surface_area(n.value);
  const double log_den = std::log(std::ldexp(1.0, n.value) - 4.0);
  const double clamp = clamp8(ld);
  GreenBoundConstants c;
  c.pointwise = LogNumber::from_log(-std::log(d - 2.0) - log_w);
  c.boundary = LogNumber::from_log((2.0 * d - 2.0) * kLog2 + std::log(clamp) - log_den - log_w);
  c.gradient = LogNumber::from_log(d * std::log(8.0) + 1.5 * std::log(d) +
                                   log_surface_area(n.value - 1) - std::log(d - 1.0) - log_den -
                                   2.0 * log_w + std::log(clamp));
  return c;
}

double curvature_threshold(ComplexDim n, double volume) {
  require_complex_dim(n);
  require_pos(volume, "volume");
  const double c = n.value;
  const double j = bessel_first_root(c - 1.0);
  return 0.5 * j * j * std::pow(surface_area(2 * n.value - 1) / (2.0 * c), 1.0 / c) *
         std::pow(volume, -1.0 / c);
}

double max_principle_factor(double k, double diam, GrowthMode mode) {
  require_nonneg(k, "K");
  require_pos(diam, "diam");
  return mode == GrowthMode::printed ? std::exp(k * diam) : std::exp(0.5 * k * diam * diam);
}

GreenFormConstants green_form_constants(ComplexDim n, const CurvatureParams& curv, double diam,
                                        double ld, ConstantMode mode) {
  require_complex_dim(n);
  require_nonneg(curv.k, "K");
  require_nonneg(curv.k_plus, "K_+");
  require_nonneg(curv.k_minus, "K_-");
  require_pos(diam, "diam");
  require_nonneg(ld, "LD");
  const double c = n.value;
  const double k = curv.k;
  const double log_w = log_surface_area(2 * n.value);
  const double log_nw = std::log(c) + log_w;
  const double half_log_k = k > 0.0 ? 0.5 * std::log(k) : 0.0;

  GreenFormConstants out;

  // C1 = (K^{(n-1)/2} + exp(t1)) / ((2n-2) omega_{2n}); the proof ends with (n-1).
  const double t1 = k > 0.0 ? std::exp((2.0 * c + 11.0) * kLog2 + log_nw / (c - 1.0) +
                                       (4.0 * c - 2.0) / (c - 1.0) * std::log(diam) + half_log_k)
                            : 0.0;
  const double c1_den = mode == ConstantMode::statement ? 2.0 * c - 2.0 : c - 1.0;
  out.c1 = (curvature_power(k, 0.5 * (c - 1.0)) + LogNumber::exp(t1)) /
           LogNumber::from_log(std::log(c1_den) + log_w);

  // C2 = (K^{n/2} + exp(t2)) 2^{4n-2} max{8, LD} / ((4^n - 4) omega_{2n}).
  const double t2 = k > 0.0 ? std::exp((c + 8.0) * kLog2 + log_nw / c + 4.0 * std::log(diam) +
                                       half_log_k)
                            : 0.0;
  double log_c5 = (4.0 * c - 2.0) * kLog2 + std::log(clamp8(ld)) -
                  std::log(std::pow(4.0, c) - 4.0) - log_w;
  // The same halving step is dropped in the proof of the second bound.
  if (mode == ConstantMode::proof) log_c5 += kLog2;
  out.c2 = (curvature_power(k, 0.5 * c) + LogNumber::exp(t2)) * LogNumber::from_log(log_c5);

  out.c11 = gradient_interior_constant(n, curv, diam);
  out.c3 = LogNumber::from_log(c * std::log(4.0)) * max(out.c1, out.c2) *
           (LogNumber::from_value(32.0) * out.c11).pow(0.5);
  return out;
}

LogNumber gradient_interior_constant(ComplexDim n, const CurvatureParams& curv, double diam) {
  require_complex_dim(n);
  require_nonneg(curv.k, "K");
  require_nonneg(curv.k_plus, "K_+");
  require_nonneg(curv.k_minus, "K_-");
  require_pos(diam, "diam");
  const double c = n.value;
  const double d2 = diam * diam;
  const double log_value = (3.0 * c * c + 9.0 * c + 6.0) * kLog2 + log_surface_area(2 * n.value) +
                           c * std::log1p(std::max(curv.k_plus, curv.k_minus) * d2) +
                           std::log1p(curv.k * d2);
  return LogNumber::from_log(log_value);
}

LogNumber section_carleman_constant(ComplexDim n, double p, LogNumber c3, double k, double diam,
                                    SectionCarlemanOptions opts) {
  require_complex_dim(n);
  require_p(p);
  require_nonneg(k, "K");
  require_pos(diam, "diam");
  if (c3.is_zero()) throw DomainError("section_carleman_constant: C3 must be > 0");
  const double c = n.value;
  const double factor = opts.prefactor == PrefactorMode::two_n ? 2.0 * c : 4.0 * c;
  const double log_inner = std::log(factor) + (1.0 - 1.0 / (2.0 * c)) * log_surface_area(2 * n.value) +
                           c3.log_value();
  const double log_growth = opts.growth == GrowthMode::printed ? k * diam : 0.5 * k * diam * diam;
  const double log_value = kLog2 + (1.0 - 2.0 * c) / (2.0 * c * p) * std::log(p - 1.0) -
                           std::log(p) / (2.0 * c * p) + log_inner / p +
                           (1.0 - 1.0 / p) * log_growth;
  return LogNumber::from_log(log_value);
}

LogNumber section_interior_constant(ComplexDim n, double p, LogNumber c3, SlotMode mode) {
  require_complex_dim(n);
  require_p(p);
  if (c3.is_zero()) throw DomainError("section_interior_constant: C3 must be > 0");
  const double c = n.value;
  const double slot = mode == SlotMode::printed ? c - 2.0 * p : 2.0 * c - p;
  if (!(slot > 0.0)) {
    throw DomainError("section_interior_constant: slot " + std::string(mode == SlotMode::printed ? "n - 2p" : "2n - p") +
                      " must be positive");
  }
  const double log_value = kLog2 + (1.0 - 1.0 / (2.0 * c)) * log_surface_area(2 * n.value) +
                           (1.0 - p / (2.0 * c)) * (c * std::log(36.0) + std::log(p) - std::log(p - 1.0)) +
                           (p - 1.0) / (2.0 * c) * (std::log(p - 1.0) - std::log(slot)) +
                           c3.log_value();
  return LogNumber::from_log(log_value);
}

LogNumber heat_bound_constant(ComplexDim n, double diam) {
  require_complex_dim(n);
  require_pos(diam, "diam");
  const double c = n.value;
  return LogNumber::from_log((c * c + 4.0 * c + 1.0) * kLog2 + std::log(c) + 2.0 * c * std::log(diam));
}

double eigen_lower_bound(ComplexDim n, double volume, int k) {
  require_complex_dim(n);
  require_pos(volume, "volume");
  if (k < 1) throw DomainError("eigen_lower_bound: k must be >= 1");
  const double c = n.value;
  return 4.0 * kPi * c * std::exp(-1.0) * std::pow(volume, -1.0 / c) * std::pow(k, 1.0 / c);
}

LogNumber eigenfn_sup_constant(ComplexDim n, double lambda) {
  require_complex_dim(n);
  require_pos(lambda, "lambda");
  const double c = n.value;
  return LogNumber::from_log((c * c + 2.0 * c) * kLog2 + c * std::log(lambda));
}

ProofConstants c5_c6_c7(ComplexDim n, double diam, double ld) {
  require_complex_dim(n);
  require_pos(diam, "diam");
  require_nonneg(ld, "LD");
  const double c = n.value;
  const double log_clamp = std::log(clamp8(ld));
  const double log_den = std::log(std::pow(4.0, c) - 4.0);
  ProofConstants out;
  out.c5 = LogNumber::from_log((4.0 * c - 2.0) * kLog2 + log_clamp - log_den - log_surface_area(2 * n.value));
  out.c6 = LogNumber::from_log((0.5 * c * c + 5.0 * c - 2.0) * kLog2 + log_clamp + std::log(diam) - log_den);
  out.c7 = LogNumber::from_log((c * c + 8.0 * c + 1.0) * kLog2 + (c + 1.0) * std::log(c + 1.0) - log_den -
                               1.0 - (c - 1.0) * std::log(c) + log_clamp +
                               (2.0 * c + 1.0) * std::log(diam));
  return out;
}

}  // namespace carleman
