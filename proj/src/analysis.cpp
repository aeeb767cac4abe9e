#include "carleman/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carleman/errors.hpp"
#include "carleman/special.hpp"
#include "carleman/summation.hpp"

namespace carleman {

namespace {

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("exponent p must be in [1, inf)");
}

double dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

void check_rule_point(const QuadratureRule& rule, std::span<const double> x) {
  if (static_cast<int>(x.size()) != rule.dim) {
    throw InvalidDimension("point dimension " + std::to_string(x.size()) +
                           " does not match rule dimension " + std::to_string(rule.dim));
  }
}

}  // namespace

double lp_norm(std::span<const double> values, std::span<const double> weights, double p) {
  check_p(p);
  if (values.size() != weights.size()) throw DomainError("values and weights differ in length");
  // Scale by the largest magnitude so |f|^p neither overflows nor underflows.
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  NeumaierSum s;
  for (std::size_t i = 0; i < values.size(); ++i) s.add(weights[i] * std::pow(std::abs(values[i]) / m, p));
  return m * std::pow(s.value(), 1.0 / p);
}

double lp_norm(const TestFunction& f, const QuadratureRule& rule, double p) {
  if (f.dim() != 0 && f.dim() != rule.dim) {
    throw InvalidDimension("test function dimension " + std::to_string(f.dim()) +
                           " does not match rule dimension " + std::to_string(rule.dim));
  }
  std::vector<double> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) values[i] = f.abs(rule.node(i));
  return lp_norm(values, rule.weights, p);
}

double weak_lp_norm(std::span<const double> values, std::span<const double> weights, double p) {
  check_p(p);
  if (values.empty()) throw EmptyInput("weak_lp_norm: no samples");
  if (values.size() != weights.size()) throw DomainError("values and weights differ in length");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(values[a]) > std::abs(values[b]);
  });
  // For t just below a level v, mu(|f| > t) is the weight of all samples
  // with |f| >= v; the sup over that interval is approached at t = v.
  NeumaierSum mass;
  double best = 0.0;
  std::size_t k = 0;
  while (k < order.size()) {
    const double v = std::abs(values[order[k]]);
    if (v == 0.0) break;
    while (k < order.size() && std::abs(values[order[k]]) == v) {
      if (!(weights[order[k]] > 0.0)) throw DomainError("weights must be positive");
      mass.add(weights[order[k]]);
      ++k;
    }
    best = std::max(best, v * std::pow(mass.value(), 1.0 / p));
  }
  return best;
}

namespace {

void check_riesz_a(double a, int n) {
  if (!(a > 0.0 && a < n)) throw DomainError("Riesz order a must lie in (0, n)");
}

double self_cell(double weight, double a, int n, double f) {
  const double omega = surface_area(n);
  const double rho = std::pow(n * weight / omega, 1.0 / n);
  return omega * std::pow(rho, a) / a * std::abs(f);
}

}  // namespace

double riesz_potential_at_node(std::span<const double> samples, const QuadratureRule& rule,
                               double a, std::size_t i) {
  const int n = rule.dim;
  check_riesz_a(a, n);
  if (samples.size() != rule.size()) throw DomainError("sample count differs from rule size");
  const auto x = rule.node(i);
  const double e = 0.5 * (a - n);
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    if (j == i) {
      s.add(self_cell(rule.weights[i], a, n, samples[i]));
      continue;
    }
    const double r2 = dist2(x, rule.node(j));
    if (r2 == 0.0) continue;  // duplicate node: already covered by the cell
    s.add(rule.weights[j] * std::abs(samples[j]) * std::pow(r2, e));
  }
  return s.value();
}

double riesz_potential(std::span<const double> samples, const QuadratureRule& rule, double a,
                       std::span<const double> x) {
  check_rule_point(rule, x);
  check_riesz_a(a, rule.dim);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (dist2(x, rule.node(i)) == 0.0) return riesz_potential_at_node(samples, rule, a, i);
  }
  if (samples.size() != rule.size()) throw DomainError("sample count differs from rule size");
  const double e = 0.5 * (a - rule.dim);
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    s.add(rule.weights[j] * std::abs(samples[j]) * std::pow(dist2(x, rule.node(j)), e));
  }
  return s.value();
}

QuadratureRule polar_ball_rule(const Domain& ball, std::span<const double> x, int level) {
  if (ball.kind() != DomainKind::ball) throw InvalidDomain("polar_ball_rule needs a ball");
  const int n = ball.dim();
  if (static_cast<int>(x.size()) != n) throw InvalidDimension("point dimension mismatch");
  std::vector<double> xc(n);
  double xx = 0.0;
  for (int i = 0; i < n; ++i) {
    xc[i] = x[i] - ball.center()[i];
    xx += xc[i] * xc[i];
  }
  const double r2 = ball.radius() * ball.radius();
  if (xx >= r2) throw DomainError("polar_ball_rule: point must be interior");
  const QuadratureRule sphere = unit_sphere_rule(n, sphere_points_per_angle(level));
  const GaussRule1D radial = gauss_legendre(sphere_points_per_angle(level));
  QuadratureRule rule;
  rule.dim = n;
  rule.target = QuadratureTarget::interior;
  rule.level = level;
  rule.order_tag = static_cast<int>(radial.nodes.size() * sphere.size());
  rule.nodes.reserve(rule.order_tag * n);
  rule.weights.reserve(rule.order_tag);
  for (std::size_t j = 0; j < sphere.size(); ++j) {
    const auto u = sphere.node(j);
    double xu = 0.0;
    for (int i = 0; i < n; ++i) xu += xc[i] * u[i];
    const double rho_max = -xu + std::sqrt(xu * xu + r2 - xx);
    for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
      const double rho = 0.5 * rho_max * (1.0 + radial.nodes[k]);
      for (int i = 0; i < n; ++i) rule.nodes.push_back(x[i] + rho * u[i]);
      rule.weights.push_back(sphere.weights[j] * 0.5 * rho_max * radial.weights[k] *
                             std::pow(rho, n - 1));
    }
  }
  return rule;
}

double riesz_potential(const std::function<double(std::span<const double>)>& f,
                       const Domain& ball, double a, std::span<const double> x, int level) {
  check_riesz_a(a, ball.dim());
  const QuadratureRule rule = polar_ball_rule(ball, x, level);
  const double e = 0.5 * (a - ball.dim());
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const auto y = rule.node(j);
    s.add(rule.weights[j] * std::abs(f(y)) * std::pow(dist2(x, y), e));
  }
  return s.value();
}

double boundary_potential(std::span<const double> samples, const QuadratureRule& rule,
                          std::span<const double> x) {
  check_rule_point(rule, x);
  if (samples.size() != rule.size()) throw DomainError("sample count differs from rule size");
  const double e = 0.5 * (1.0 - rule.dim);
  NeumaierSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double r2 = dist2(x, rule.node(j));
    if (r2 == 0.0) throw SingularEvaluation("boundary potential evaluated at a boundary node");
    s.add(rule.weights[j] * std::abs(samples[j]) * std::pow(r2, e));
  }
  return s.value();
}

double boundary_potential(std::span<const double> samples, const QuadratureRule& rule,
                          const Domain& d, std::span<const double> x) {
  if (dist_to_boundary(d, x) <= 0.0) {
    throw SingularEvaluation("boundary potential evaluated on the boundary");
  }
  return boundary_potential(samples, rule, x);
}

std::size_t GridFunction::size() const {
  std::size_t s = 1;
  for (int c : cells) s *= static_cast<std::size_t>(c);
  return s;
}

std::vector<double> GridFunction::cell_center(std::size_t index) const {
  const int n = box.dim();
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::size_t k = index % cells[i];
    index /= cells[i];
    const double h = (box.upper()[i] - box.lower()[i]) / cells[i];
    x[i] = box.lower()[i] + (k + 0.5) * h;
  }
  return x;
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < box.dim(); ++i) v *= (box.upper()[i] - box.lower()[i]) / cells[i];
  return v;
}

std::size_t GridFunction::cell_of(std::span<const double> x) const {
  std::size_t index = 0;
  for (int i = 0; i < box.dim(); ++i) {
    const double h = (box.upper()[i] - box.lower()[i]) / cells[i];
    int k = static_cast<int>(std::floor((x[i] - box.lower()[i]) / h));
    k = std::clamp(k, 0, cells[i] - 1);
    index = index * cells[i] + k;
  }
  return index;
}

GridFunction sample_on_grid(const Domain& box, std::vector<int> cells,
                            const std::function<double(std::span<const double>)>& f) {
  if (box.kind() != DomainKind::box) throw InvalidDomain("grid functions live on boxes");
  if (static_cast<int>(cells.size()) != box.dim()) throw InvalidDimension("cell counts differ from box dimension");
  for (int c : cells) {
    if (c < 1) throw DomainError("cell counts must be positive");
  }
  GridFunction g{box, std::move(cells), {}};
  g.values.resize(g.size());
  for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] = f(g.cell_center(k));
  return g;
}

double maximal_function_oracle(const GridFunction& f, std::span<const double> x,
                               std::span<const double> radii) {
  if (static_cast<int>(x.size()) != f.box.dim()) throw InvalidDimension("point dimension mismatch");
  double best = 0.0;
  for (double r : radii) {
    if (!(r > 0.0)) throw DomainError("radii must be positive");
    NeumaierSum s;
    std::size_t count = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (dist2(f.cell_center(k), x) <= r * r) {
        s.add(std::abs(f.values[k]));
        ++count;
      }
    }
    const double mean = count ? s.value() / count : std::abs(f.values[f.cell_of(x)]);
    best = std::max(best, mean);
  }
  return best;
}

}  // namespace carleman
