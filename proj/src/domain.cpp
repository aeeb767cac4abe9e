#include "carleman/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carleman/descriptor.hpp"
#include "carleman/errors.hpp"
#include "carleman/special.hpp"
#include "carleman/summation.hpp"

namespace carleman {

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::ball: return "ball";
    case DomainKind::box: return "box";
    case DomainKind::ellipsoid: return "ellipsoid";
  }
  return "?";
}

namespace {

void check_dim(std::size_t dim) {
  if (dim < 2) throw InvalidDomain("domain dimension must be >= 2");
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidDomain(std::string(what) + " must be positive and finite");
  }
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

void check_point(const Domain& d, std::span<const double> x) {
  if (static_cast<int>(x.size()) != d.dim()) {
    throw InvalidDimension("point dimension " + std::to_string(x.size()) +
                           " does not match domain dimension " + std::to_string(d.dim()));
  }
}

}  // namespace

Domain Domain::ball(std::vector<double> center, double radius) {
  check_dim(center.size());
  check_positive(radius, "ball radius");
  Domain d;
  d.kind_ = DomainKind::ball;
  d.b_.assign(center.size(), radius);
  d.a_ = std::move(center);
  d.radius_ = radius;
  return d;
}

Domain Domain::unit_ball(int dim) { return ball(std::vector<double>(std::max(dim, 0), 0.0), 1.0); }

Domain Domain::box(std::vector<double> lower, std::vector<double> upper) {
  check_dim(lower.size());
  if (lower.size() != upper.size()) throw InvalidDomain("box corners differ in dimension");
  for (std::size_t i = 0; i < lower.size(); ++i) check_positive(upper[i] - lower[i], "box edge");
  Domain d;
  d.kind_ = DomainKind::box;
  d.a_ = std::move(lower);
  d.b_ = std::move(upper);
  return d;
}

Domain Domain::unit_box(int dim) {
  return box(std::vector<double>(std::max(dim, 0), 0.0), std::vector<double>(std::max(dim, 0), 1.0));
}

Domain Domain::ellipsoid(std::vector<double> semi_axes) {
  check_dim(semi_axes.size());
  for (double a : semi_axes) check_positive(a, "ellipsoid semi-axis");
  Domain d;
  d.kind_ = DomainKind::ellipsoid;
  d.a_.assign(semi_axes.size(), 0.0);
  d.b_ = std::move(semi_axes);
  return d;
}

Domain Domain::with_override(GeometryOverride o) const {
  if (!(o.lc >= 0.0) || !std::isfinite(o.lc)) throw InvalidDomain("override lc must be >= 0");
  Domain d = *this;
  d.override_ = o;
  return d;
}

bool Domain::contains(std::span<const double> x, double tol) const {
  check_point(*this, x);
  switch (kind_) {
    case DomainKind::ball: {
      double s = 0.0;
      for (int i = 0; i < dim(); ++i) s += (x[i] - a_[i]) * (x[i] - a_[i]);
      return std::sqrt(s) <= radius_ + tol;
    }
    case DomainKind::box:
      for (int i = 0; i < dim(); ++i) {
        if (x[i] < a_[i] - tol || x[i] > b_[i] + tol) return false;
      }
      return true;
    case DomainKind::ellipsoid: {
      double s = 0.0;
      for (int i = 0; i < dim(); ++i) s += (x[i] / b_[i]) * (x[i] / b_[i]);
      return std::sqrt(s) <= 1.0 + tol / *std::min_element(b_.begin(), b_.end());
    }
  }
  return false;
}

std::string Domain::descriptor() const {
  std::string out;
  switch (kind_) {
    case DomainKind::ball:
      out = "ball dim=" + std::to_string(dim()) + " r=" + format_real(radius_);
      if (std::any_of(a_.begin(), a_.end(), [](double c) { return c != 0.0; })) {
        out += " center=" + format_real_list(a_);
      }
      break;
    case DomainKind::box: {
      std::vector<double> edges(dim());
      for (int i = 0; i < dim(); ++i) edges[i] = b_[i] - a_[i];
      out = "box dim=" + std::to_string(dim()) + " edges=" + format_real_list(edges);
      if (std::any_of(a_.begin(), a_.end(), [](double c) { return c != 0.0; })) {
        out += " lower=" + format_real_list(a_);
      }
      break;
    }
    case DomainKind::ellipsoid:
      out = "ellipsoid axes=" + format_real_list(b_);
      break;
  }
  if (override_) {
    out += " override lc=" + format_real(override_->lc) +
           " convex=" + (override_->convex ? "true" : "false");
  }
  return out;
}

namespace {

double ellipsoid_area(const Domain& d) {
  return boundary_quadrature(d, kMaxLevel).weight_sum();
}

}  // namespace

GeometryParams geometry(const Domain& d) {
  const int n = d.dim();
  GeometryParams g{};
  g.dim = n;
  g.convex = true;
  const double omega = surface_area(n);
  switch (d.kind()) {
    case DomainKind::ball:
      g.diam = 2.0 * d.radius();
      g.volume = omega / n * std::pow(d.radius(), n);
      g.boundary_area = omega * std::pow(d.radius(), n - 1);
      g.lc = 1.0 / d.radius();
      break;
    case DomainKind::box: {
      double diag = 0.0;
      double vol = 1.0;
      for (int i = 0; i < n; ++i) {
        const double e = d.upper()[i] - d.lower()[i];
        diag += e * e;
        vol *= e;
      }
      NeumaierSum area;
      for (int i = 0; i < n; ++i) area.add(2.0 * vol / (d.upper()[i] - d.lower()[i]));
      g.diam = std::sqrt(diag);
      g.volume = vol;
      g.boundary_area = area.value();
      break;
    }
    case DomainKind::ellipsoid: {
      const auto& ax = d.semi_axes();
      const double amax = *std::max_element(ax.begin(), ax.end());
      const double amin = *std::min_element(ax.begin(), ax.end());
      double prod = 1.0;
      for (double a : ax) prod *= a;
      g.diam = 2.0 * amax;
      g.volume = omega / n * prod;
      g.boundary_area = ellipsoid_area(d);
      // The normal map is a_max/a_min^2-Lipschitz: a ball of radius
      // a_min^2/a_max rolls inside, and the nearest-point map onto a convex
      // body is 1-Lipschitz.
      g.lc = amax / (amin * amin);
      break;
    }
  }
  if (const auto& o = d.geometry_override()) {
    g.lc = o->lc;
    g.convex = o->convex;
  }
  g.ld = (g.convex || !g.lc) ? 0.0 : g.diam * *g.lc;
  return g;
}

namespace {

// Boundary point and outward normal for a direction u on the unit sphere.
void boundary_from_direction(const Domain& d, std::span<const double> u, std::vector<double>& x,
                             std::vector<double>& nu) {
  const int n = d.dim();
  x.resize(n);
  nu.resize(n);
  if (d.kind() == DomainKind::ball) {
    for (int i = 0; i < n; ++i) {
      x[i] = d.center()[i] + d.radius() * u[i];
      nu[i] = u[i];
    }
    return;
  }
  const auto& ax = d.semi_axes();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    x[i] = ax[i] * u[i];
    nu[i] = u[i] / ax[i];
    s += nu[i] * nu[i];
  }
  s = 1.0 / std::sqrt(s);
  for (double& c : nu) c *= s;
}

}  // namespace

std::optional<double> lc_estimate(const Domain& d, int sample_pairs, std::uint64_t seed) {
  if (d.kind() == DomainKind::box) return std::nullopt;
  if (sample_pairs < 1) throw DomainError("lc_estimate: need at least one pair");
  const int n = d.dim();
  SplitMix64 rng(seed);
  std::vector<double> x, y, nx, ny;
  double best = 0.0;
  for (int k = 0; k < sample_pairs; ++k) {
    const std::vector<double> u = rng.unit_vector(n);
    std::vector<double> v;
    if (k % 2 == 0) {
      v = rng.unit_vector(n);
    } else {
      // Nearby pair: the supremum is approached as the points merge.
      const double eps = std::pow(10.0, rng.uniform(-4.0, -1.0));
      v = u;
      for (double& c : v) c += eps * rng.normal();
      const double s = norm(v);
      for (double& c : v) c /= s;
    }
    boundary_from_direction(d, u, x, nx);
    boundary_from_direction(d, v, y, ny);
    double dx = 0.0, dn = 0.0;
    for (int i = 0; i < n; ++i) {
      dx += (x[i] - y[i]) * (x[i] - y[i]);
      dn += (nx[i] - ny[i]) * (nx[i] - ny[i]);
    }
    if (dx < 1e-24) continue;
    best = std::max(best, std::sqrt(dn / dx));
  }
  return best;
}

namespace {

// Closest point on the ellipsoid sum (x_i/e_i)^2 = 1 to y, for e sorted in
// decreasing order and y >= 0 componentwise (Eberly's reduction).
std::vector<double> ellipsoid_project_sorted(const std::vector<double>& e,
                                             const std::vector<double>& y) {
  const int n = static_cast<int>(e.size());
  std::vector<double> x(n, 0.0);

  // Root of F(t) = sum (e_i y_i / (t + e_i^2))^2 - 1 over the positive
  // components, with t > -e_m^2 for the smallest such axis e_m.
  auto solve = [&](const std::vector<int>& idx) {
    const int m = idx.back();
    double lo = -e[m] * e[m] + e[m] * y[m];
    double hi = 0.0;
    auto f = [&](double t) {
      double s = -1.0;
      for (int i : idx) {
        const double r = e[i] * y[i] / (t + e[i] * e[i]);
        s += r * r;
      }
      return s;
    };
    if (f(hi) > 0.0) {
      // Outside the ellipsoid: grow the bracket.
      double step = 1.0;
      while (f(hi) > 0.0) {
        lo = hi;
        hi += step;
        step *= 2.0;
      }
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(t)); ++it) {
      const double ft = f(t);
      if (ft > 0.0) lo = t; else hi = t;
      if (ft == 0.0) break;
      double dft = 0.0;
      for (int i : idx) {
        const double q = t + e[i] * e[i];
        const double r = e[i] * y[i] / q;
        dft -= 2.0 * r * r / q;
      }
      double next = t - ft / dft;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      t = next;
    }
    for (int i : idx) x[i] = e[i] * e[i] * y[i] / (t + e[i] * e[i]);
  };

  std::vector<int> positive;
  for (int i = 0; i < n; ++i) {
    if (y[i] > 0.0) positive.push_back(i);
  }
  if (y[n - 1] > 0.0) {
    solve(positive);
    return x;
  }
  // y on the hyperplane of the shortest axis: the candidate with t = -e_last^2.
  const double el = e[n - 1];
  double discr = 1.0;
  bool feasible = true;
  std::vector<double> cand(n, 0.0);
  for (int i : positive) {
    const double denom = e[i] * e[i] - el * el;
    if (denom <= 0.0) {
      feasible = false;
      break;
    }
    const double xde = e[i] * y[i] / denom;
    cand[i] = e[i] * xde;
    discr -= xde * xde;
  }
  if (feasible && discr > 0.0) {
    cand[n - 1] = el * std::sqrt(discr);
    return cand;
  }
  if (positive.empty()) {
    x[n - 1] = el;
    return x;
  }
  solve(positive);
  return x;
}

std::vector<double> ellipsoid_project(const std::vector<double>& axes, std::span<const double> y) {
  const int n = static_cast<int>(axes.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return axes[a] > axes[b]; });
  std::vector<double> e(n), ya(n);
  for (int k = 0; k < n; ++k) {
    e[k] = axes[perm[k]];
    ya[k] = std::abs(y[perm[k]]);
  }
  const std::vector<double> xs = ellipsoid_project_sorted(e, ya);
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) {
    const int i = perm[k];
    x[i] = std::copysign(xs[k], y[i] < 0.0 ? -1.0 : 1.0);
  }
  return x;
}

void require_closure(const Domain& d, std::span<const double> x) {
  check_point(d, x);
  if (!d.contains(x, 1e-12)) throw DomainError("point lies outside the closed domain");
}

}  // namespace

std::vector<double> nearest_boundary_point(const Domain& d, std::span<const double> x) {
  require_closure(d, x);
  const int n = d.dim();
  std::vector<double> out(x.begin(), x.end());
  switch (d.kind()) {
    case DomainKind::ball: {
      std::vector<double> u(n);
      for (int i = 0; i < n; ++i) u[i] = x[i] - d.center()[i];
      double r = norm(u);
      if (r == 0.0) {
        u.assign(n, 0.0);
        u[0] = 1.0;
        r = 1.0;
      }
      for (int i = 0; i < n; ++i) out[i] = d.center()[i] + d.radius() * u[i] / r;
      return out;
    }
    case DomainKind::box: {
      int best_axis = 0;
      bool upper = false;
      double best = INFINITY;
      for (int i = 0; i < n; ++i) {
        const double lo = x[i] - d.lower()[i];
        const double hi = d.upper()[i] - x[i];
        if (lo < best) { best = lo; best_axis = i; upper = false; }
        if (hi < best) { best = hi; best_axis = i; upper = true; }
      }
      out[best_axis] = upper ? d.upper()[best_axis] : d.lower()[best_axis];
      return out;
    }
    case DomainKind::ellipsoid:
      return ellipsoid_project(d.semi_axes(), x);
  }
  return out;
}

double dist_to_boundary(const Domain& d, std::span<const double> x) {
  require_closure(d, x);
  const int n = d.dim();
  switch (d.kind()) {
    case DomainKind::ball: {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += (x[i] - d.center()[i]) * (x[i] - d.center()[i]);
      return std::max(0.0, d.radius() - std::sqrt(s));
    }
    case DomainKind::box: {
      double best = INFINITY;
      for (int i = 0; i < n; ++i) {
        best = std::min({best, x[i] - d.lower()[i], d.upper()[i] - x[i]});
      }
      return std::max(0.0, best);
    }
    case DomainKind::ellipsoid: {
      const std::vector<double> p = ellipsoid_project(d.semi_axes(), x);
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += (x[i] - p[i]) * (x[i] - p[i]);
      return std::sqrt(s);
    }
  }
  return 0.0;
}

std::vector<double> outward_normal(const Domain& d, std::span<const double> p) {
  check_point(d, p);
  const int n = d.dim();
  std::vector<double> nu(n, 0.0);
  switch (d.kind()) {
    case DomainKind::ball:
      for (int i = 0; i < n; ++i) nu[i] = (p[i] - d.center()[i]) / d.radius();
      break;
    case DomainKind::ellipsoid:
      for (int i = 0; i < n; ++i) nu[i] = p[i] / (d.semi_axes()[i] * d.semi_axes()[i]);
      break;
    case DomainKind::box: {
      // Face whose plane is closest to p.
      int axis = 0;
      double sign = -1.0;
      double best = INFINITY;
      for (int i = 0; i < n; ++i) {
        const double lo = std::abs(p[i] - d.lower()[i]);
        const double hi = std::abs(p[i] - d.upper()[i]);
        if (lo < best) { best = lo; axis = i; sign = -1.0; }
        if (hi < best) { best = hi; axis = i; sign = 1.0; }
      }
      nu[axis] = sign;
      return nu;
    }
  }
  const double s = norm(nu);
  for (double& c : nu) c /= s;
  return nu;
}

namespace {

// Tensor Gauss-Legendre rule on the box spanned by the given axes.
void tensor_rule(const std::vector<GaussRule1D>& axes, std::vector<double>& nodes,
                 std::vector<double>& weights) {
  const int n = static_cast<int>(axes.size());
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.nodes.size();
  nodes.reserve(nodes.size() + total * n);
  weights.reserve(weights.size() + total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      nodes.push_back(axes[i].nodes[idx[i]]);
      w *= axes[i].weights[idx[i]];
    }
    weights.push_back(w);
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < axes[i].nodes.size()) break;
      idx[i] = 0;
    }
  }
}

}  // namespace

QuadratureRule interior_quadrature(const Domain& d, int level) {
  const int n = d.dim();
  const int count = solid_points_per_axis(level);
  QuadratureRule rule;
  switch (d.kind()) {
    case DomainKind::ball:
    case DomainKind::ellipsoid: {
      rule = unit_ball_rule(n, count);
      std::vector<double> scale(n);
      double jac = 1.0;
      for (int i = 0; i < n; ++i) {
        scale[i] = d.kind() == DomainKind::ball ? d.radius() : d.semi_axes()[i];
        jac *= scale[i];
      }
      for (std::size_t k = 0; k < rule.size(); ++k) {
        for (int i = 0; i < n; ++i) {
          double& c = rule.nodes[k * n + i];
          c = d.center()[i] + scale[i] * c;
        }
        rule.weights[k] *= jac;
      }
      break;
    }
    case DomainKind::box: {
      std::vector<GaussRule1D> axes;
      for (int i = 0; i < n; ++i) axes.push_back(gauss_legendre(count, d.lower()[i], d.upper()[i]));
      rule.dim = n;
      rule.target = QuadratureTarget::interior;
      rule.order_tag = 2 * count - 1;
      tensor_rule(axes, rule.nodes, rule.weights);
      break;
    }
  }
  rule.level = level;
  return rule;
}

QuadratureRule boundary_quadrature(const Domain& d, int level) {
  const int n = d.dim();
  QuadratureRule rule;
  switch (d.kind()) {
    case DomainKind::ball: {
      rule = unit_sphere_rule(n, sphere_points_per_angle(level));
      const double jac = std::pow(d.radius(), n - 1);
      for (std::size_t k = 0; k < rule.size(); ++k) {
        for (int i = 0; i < n; ++i) {
          rule.nodes[k * n + i] = d.center()[i] + d.radius() * rule.nodes[k * n + i];
        }
        rule.weights[k] *= jac;
      }
      break;
    }
    case DomainKind::ellipsoid: {
      // x = A u; dS = det(A) |A^{-1} u| dS(u), normal along A^{-1} u.
      rule = unit_sphere_rule(n, sphere_points_per_angle(level));
      const auto& ax = d.semi_axes();
      double det = 1.0;
      for (double a : ax) det *= a;
      for (std::size_t k = 0; k < rule.size(); ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
          const double u = rule.nodes[k * n + i];
          rule.nodes[k * n + i] = ax[i] * u;
          rule.normals[k * n + i] = u / ax[i];
          s += (u / ax[i]) * (u / ax[i]);
        }
        s = std::sqrt(s);
        for (int i = 0; i < n; ++i) rule.normals[k * n + i] /= s;
        rule.weights[k] *= det * s;
      }
      rule.order_tag = static_cast<int>(rule.size());
      break;
    }
    case DomainKind::box: {
      const int count = solid_points_per_axis(level);
      rule.dim = n;
      rule.target = QuadratureTarget::boundary;
      rule.order_tag = 2 * count - 1;
      for (int axis = 0; axis < n; ++axis) {
        for (int side = 0; side < 2; ++side) {
          std::vector<GaussRule1D> axes;
          for (int i = 0; i < n; ++i) {
            if (i == axis) {
              const double v = side ? d.upper()[i] : d.lower()[i];
              axes.push_back({{v}, {1.0}});
            } else {
              axes.push_back(gauss_legendre(count, d.lower()[i], d.upper()[i]));
            }
          }
          const std::size_t before = rule.weights.size();
          tensor_rule(axes, rule.nodes, rule.weights);
          for (std::size_t k = before; k < rule.weights.size(); ++k) {
            for (int i = 0; i < n; ++i) {
              rule.normals.push_back(i == axis ? (side ? 1.0 : -1.0) : 0.0);
            }
          }
        }
      }
      break;
    }
  }
  rule.level = level;
  return rule;
}

Domain parse_domain(const std::string& descriptor) {
  const std::vector<Token> tokens = tokenize(descriptor);
  if (tokens.empty()) throw ParseError("empty domain descriptor", 0, 1);
  const std::string& kind = tokens[0].text;
  if (kind != "ball" && kind != "box" && kind != "ellipsoid") {
    throw ParseError("unknown domain kind '" + kind + "'", 0, tokens[0].column);
  }
  std::optional<int> dim;
  std::optional<double> radius;
  std::optional<std::vector<double>> center, edges, lower, axes;
  std::optional<double> lc;
  std::optional<bool> convex;
  bool in_override = false;
  int override_col = 0;
  int dim_col = 0;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (t.text == "override") {
      if (in_override) throw ParseError("duplicate 'override'", 0, t.column);
      in_override = true;
      override_col = t.column;
      continue;
    }
    const KeyValue kv = split_key_value(t);
    auto bad_key = [&]() -> ParseError {
      return ParseError("unexpected key '" + kv.key + "' for " + kind, 0, kv.column);
    };
    if (in_override) {
      if (kv.key == "lc") lc = parse_real(kv.value, kv.value_column);
      else if (kv.key == "convex") convex = parse_bool(kv.value, kv.value_column);
      else throw bad_key();
      continue;
    }
    if (kv.key == "dim" && kind != "ellipsoid") {
      dim = static_cast<int>(parse_integer(kv.value, kv.value_column));
      dim_col = kv.value_column;
    } else if (kv.key == "r" && kind == "ball") {
      radius = parse_real(kv.value, kv.value_column);
    } else if (kv.key == "center" && kind == "ball") {
      center = parse_real_list(kv.value, kv.value_column);
    } else if (kv.key == "edges" && kind == "box") {
      edges = parse_real_list(kv.value, kv.value_column);
    } else if (kv.key == "lower" && kind == "box") {
      lower = parse_real_list(kv.value, kv.value_column);
    } else if (kv.key == "axes" && kind == "ellipsoid") {
      axes = parse_real_list(kv.value, kv.value_column);
    } else {
      throw bad_key();
    }
  }
  const int end_col = static_cast<int>(descriptor.size()) + 1;
  auto missing = [&](const char* key) {
    return ParseError(std::string("missing '") + key + "' for " + kind, 0, end_col);
  };
  try {
    Domain d;
    if (kind == "ball") {
      if (!dim) throw missing("dim");
      const double r = radius.value_or(1.0);
      std::vector<double> c = center.value_or(std::vector<double>(std::max(*dim, 0), 0.0));
      if (static_cast<int>(c.size()) != *dim) throw ParseError("center length differs from dim", 0, dim_col);
      d = Domain::ball(std::move(c), r);
    } else if (kind == "box") {
      if (!dim) throw missing("dim");
      if (!edges) throw missing("edges");
      if (static_cast<int>(edges->size()) != *dim) throw ParseError("edges length differs from dim", 0, dim_col);
      std::vector<double> lo = lower.value_or(std::vector<double>(*dim, 0.0));
      if (lo.size() != edges->size()) throw ParseError("lower length differs from dim", 0, dim_col);
      std::vector<double> hi(lo.size());
      for (std::size_t i = 0; i < lo.size(); ++i) hi[i] = lo[i] + (*edges)[i];
      d = Domain::box(std::move(lo), std::move(hi));
    } else {
      if (!axes) throw missing("axes");
      d = Domain::ellipsoid(*axes);
    }
    if (in_override) {
      if (!lc) throw ParseError("override needs lc=", 0, override_col);
      d = d.with_override({*lc, convex.value_or(false)});
    }
    return d;
  } catch (const InvalidDomain& e) {
    throw ParseError(e.what(), 0, tokens[0].column);
  }
}

}  // namespace carleman
