#include "carleman/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "carleman/analysis.hpp"
#include "carleman/errors.hpp"
#include "carleman/special.hpp"
#include "carleman/summation.hpp"

namespace carleman {

namespace {

constexpr double kBoundaryTol = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

void check_pair(int n, std::span<const double> x, std::span<const double> y) {
  if (n < 3) throw InvalidDimension("ball Green function needs n >= 3");
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw InvalidDimension("point dimension differs from n");
  }
  if (dot(x, x) >= 1.0) throw DomainError("x must lie in the open unit ball");
  if (dot(y, y) > 1.0 + kBoundaryTol) throw DomainError("y must lie in the closed unit ball");
  if (dist2(x, y) == 0.0) throw SingularEvaluation("Green function evaluated on the diagonal");
}

// Q = 1 - 2 x.y + |x|^2 |y|^2 = |x|^2 |y - x/|x|^2|^2 > 0 for interior x.
double image_q(std::span<const double> x, std::span<const double> y) {
  return 1.0 - 2.0 * dot(x, y) + dot(x, x) * dot(y, y);
}

struct Local {
  std::vector<double> x;
  std::vector<double> y;
  double r;
};

Local to_unit(const Domain& ball, std::span<const double> x, std::span<const double> y) {
  if (ball.kind() != DomainKind::ball) throw InvalidDomain("closed-form kernels need a ball");
  const int n = ball.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw InvalidDimension("point dimension differs from the ball dimension");
  }
  Local l{std::vector<double>(n), std::vector<double>(n), ball.radius()};
  for (int i = 0; i < n; ++i) {
    l.x[i] = (x[i] - ball.center()[i]) / l.r;
    l.y[i] = (y[i] - ball.center()[i]) / l.r;
  }
  return l;
}

}  // namespace

double green_ball(int n, std::span<const double> x, std::span<const double> y) {
  check_pair(n, x, y);
  const double e = 0.5 * (2.0 - n);
  const double direct = std::pow(dist2(x, y), e);
  const double image = std::pow(image_q(x, y), e);
  return -(direct - image) / ((n - 2.0) * surface_area(n));
}

std::vector<double> green_ball_gradient(int n, std::span<const double> x, std::span<const double> y) {
  check_pair(n, x, y);
  const double a = std::pow(dist2(x, y), -0.5 * n);
  const double b = std::pow(image_q(x, y), -0.5 * n);
  const double xx = dot(x, x);
  const double inv_omega = 1.0 / surface_area(n);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = inv_omega * (a * (y[i] - x[i]) - b * (xx * y[i] - x[i]));
  return g;
}

double poisson_kernel_ball(int n, std::span<const double> x, std::span<const double> zeta) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(zeta.size()) != n) {
    throw InvalidDimension("point dimension differs from n");
  }
  if (n < 2) throw InvalidDimension("Poisson kernel needs n >= 2");
  const double xx = dot(x, x);
  if (xx >= 1.0) throw DomainError("x must lie in the open unit ball");
  if (std::abs(dot(zeta, zeta) - 1.0) > 1e-10) throw DomainError("zeta must lie on the unit sphere");
  return (1.0 - xx) / (surface_area(n) * std::pow(dist2(x, zeta), 0.5 * n));
}

double green_ball(const Domain& ball, std::span<const double> x, std::span<const double> y) {
  const Local l = to_unit(ball, x, y);
  const int n = ball.dim();
  return std::pow(l.r, 2.0 - n) * green_ball(n, l.x, l.y);
}

std::vector<double> green_ball_gradient(const Domain& ball, std::span<const double> x,
                                        std::span<const double> y) {
  const Local l = to_unit(ball, x, y);
  const int n = ball.dim();
  std::vector<double> g = green_ball_gradient(n, l.x, l.y);
  const double s = std::pow(l.r, 1.0 - n);
  for (double& c : g) c *= s;
  return g;
}

double poisson_kernel_ball(const Domain& ball, std::span<const double> x,
                           std::span<const double> zeta) {
  const Local l = to_unit(ball, x, zeta);
  const int n = ball.dim();
  return std::pow(l.r, 1.0 - n) * poisson_kernel_ball(n, l.x, l.y);
}

double heat_kernel_free(int m, double t, std::span<const double> x, std::span<const double> y) {
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m) {
    throw InvalidDimension("point dimension differs from m");
  }
  return std::pow(4.0 * kPi * t, -0.5 * m) * std::exp(-dist2(x, y) / (4.0 * t));
}

double heat_series_tail(double length, double t, int truncation) {
  const double c = (kPi / length) * (kPi / length) * t;
  const double k1 = truncation + 1.0;
  return (2.0 / length) * std::exp(-c * k1 * k1) / -std::expm1(-c * (2.0 * truncation + 3.0));
}

int heat_series_truncation(double length, double t, double tol) {
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  if (!(length > 0.0)) throw DomainError("edge length must be positive");
  int k = 1;
  while (heat_series_tail(length, t, k) >= tol) {
    if (k > 10'000'000) throw TailBoundError("heat series does not converge", k);
    k = k < 64 ? k + 1 : k + k / 4;
  }
  // Tighten after the coarse growth phase.
  while (k > 1 && heat_series_tail(length, t, k - 1) < tol) --k;
  return k;
}

double heat_kernel_box(const Domain& box, double t, std::span<const double> x,
                       std::span<const double> y, int truncation) {
  if (box.kind() != DomainKind::box) throw InvalidDomain("heat_kernel_box needs a box");
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  const int n = box.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw InvalidDimension("point dimension differs from the box dimension");
  }
  if (truncation < 0) throw DomainError("truncation must be >= 0");
  double value = 1.0;
  for (int i = 0; i < n; ++i) {
    const double len = box.upper()[i] - box.lower()[i];
    int k_max = truncation;
    if (k_max == 0) {
      k_max = heat_series_truncation(len, t);
    } else if (heat_series_tail(len, t, k_max) >= kHeatTailTolerance) {
      const int need = heat_series_truncation(len, t);
      throw TailBoundError("heat series truncation " + std::to_string(truncation) +
                               " leaves a tail above 1e-12 at t = " + std::to_string(t) +
                               "; need " + std::to_string(need),
                           need);
    }
    const double u = (x[i] - box.lower()[i]) / len;
    const double v = (y[i] - box.lower()[i]) / len;
    const double c = (kPi / len) * (kPi / len) * t;
    NeumaierSum s;
    for (int k = 1; k <= k_max; ++k) {
      s.add(std::sin(k * kPi * u) * std::sin(k * kPi * v) * std::exp(-c * k * k));
    }
    value *= (2.0 / len) * s.value();
  }
  return value;
}

std::vector<EigenPair> box_eigenpairs(const Domain& box, int count) {
  if (box.kind() != DomainKind::box) throw InvalidDomain("box_eigenpairs needs a box");
  if (count < 1) throw DomainError("count must be >= 1");
  const int n = box.dim();
  std::vector<double> inv2(n);
  double sup = 1.0;
  for (int i = 0; i < n; ++i) {
    const double len = box.upper()[i] - box.lower()[i];
    inv2[i] = 1.0 / (len * len);
    sup *= std::sqrt(2.0 / len);
  }
  const double pi2 = kPi * kPi;
  double ground = 0.0;
  for (double v : inv2) ground += v;
  double bound = 2.0 * ground;
  while (true) {
    std::vector<std::pair<double, std::vector<int>>> found;
    std::vector<int> k(n, 1);
    std::function<void(int, double)> rec = [&](int axis, double partial) {
      if (axis == n) {
        found.emplace_back(pi2 * partial, k);
        return;
      }
      double rest = 0.0;
      for (int j = axis + 1; j < n; ++j) rest += inv2[j];
      for (int m = 1;; ++m) {
        const double p = partial + m * m * inv2[axis];
        if (p + rest > bound) break;
        k[axis] = m;
        rec(axis + 1, p);
      }
    };
    rec(0, 0.0);
    if (static_cast<int>(found.size()) >= count) {
      std::sort(found.begin(), found.end());
      std::vector<EigenPair> out;
      out.reserve(count);
      for (int j = 0; j < count; ++j) out.push_back({found[j].second, found[j].first, sup, 1.0});
      return out;
    }
    bound *= 1.5;
  }
}

Complex green_rep_interior(const TestFunction& f, const Domain& ball, std::span<const double> x,
                           int level) {
  const QuadratureRule vol = polar_ball_rule(ball, x, level);
  NeumaierSum re, im;
  for (std::size_t j = 0; j < vol.size(); ++j) {
    const auto y = vol.node(j);
    const Complex term = vol.weights[j] * green_ball(ball, x, y) * f.laplacian(y);
    re.add(term.real());
    im.add(term.imag());
  }
  const QuadratureRule bnd = boundary_quadrature(ball, level);
  for (std::size_t j = 0; j < bnd.size(); ++j) {
    const auto z = bnd.node(j);
    const Complex term = bnd.weights[j] * poisson_kernel_ball(ball, x, z) * f.value(z);
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

double b_omega(std::span<const double> samples, const Domain& ball, const QuadratureRule& rule,
               std::span<const double> x) {
  if (samples.size() != rule.size()) throw DomainError("sample count differs from rule size");
  const int n = ball.dim();
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const auto y = rule.node(j);
    if (dist2(x, y) != 0.0) {
      s.add(rule.weights[j] * green_ball(ball, x, y) * samples[j]);
      continue;
    }
    // Own cell: -rho^2/(2(n-2)) from the singular part, plus the smooth
    // image part taken at the centre.
    const double omega = surface_area(n);
    const double w = rule.weights[j];
    const double rho = std::pow(n * w / omega, 1.0 / n);
    const Local l = to_unit(ball, x, x);
    const double q = image_q(l.x, l.x);
    const double image = std::pow(l.r, 2.0 - n) * std::pow(q, 0.5 * (2.0 - n)) / ((n - 2.0) * omega);
    s.add((-rho * rho / (2.0 * (n - 2.0)) + w * image) * samples[j]);
  }
  return s.value();
}

double b_omega(const std::function<double(std::span<const double>)>& g, const Domain& ball,
               std::span<const double> x, int level) {
  const QuadratureRule rule = polar_ball_rule(ball, x, level);
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const auto y = rule.node(j);
    s.add(rule.weights[j] * green_ball(ball, x, y) * g(y));
  }
  return s.value();
}

double b_boundary(std::span<const double> samples, const Domain& ball,
                  const QuadratureRule& rule, std::span<const double> x) {
  if (samples.size() != rule.size()) throw DomainError("sample count differs from rule size");
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    s.add(rule.weights[j] * poisson_kernel_ball(ball, x, rule.node(j)) * samples[j]);
  }
  return s.value();
}

}  // namespace carleman
