#include "carleman/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "carleman/errors.hpp"
#include "carleman/special.hpp"
#include "carleman/summation.hpp"

namespace carleman {

double QuadratureRule::weight_sum() const { return compensated_sum(weights); }

GaussRule1D gauss_jacobi(int count, double alpha, double beta) {
  if (count < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("gauss_jacobi: need alpha, beta > -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    sub(k - 1) = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                           (s * s * (s + 1.0) * (s - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  GaussRule1D rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int j = 0; j < count; ++j) {
    rule.nodes[j] = solver.eigenvalues()(j);
    const double v = solver.eigenvectors()(0, j);
    rule.weights[j] = mu0 * v * v;
  }
  // Symmetric weights: enforce exact antisymmetry of the nodes.
  if (alpha == beta) {
    for (int j = 0; j < count / 2; ++j) {
      const double x = 0.5 * (rule.nodes[count - 1 - j] - rule.nodes[j]);
      const double w = 0.5 * (rule.weights[count - 1 - j] + rule.weights[j]);
      rule.nodes[j] = -x;
      rule.nodes[count - 1 - j] = x;
      rule.weights[j] = rule.weights[count - 1 - j] = w;
    }
    if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  }
  return rule;
}

GaussRule1D gauss_legendre(int count) { return gauss_jacobi(count, 0.0, 0.0); }

GaussRule1D gauss_legendre(int count, double a, double b) {
  GaussRule1D r = gauss_legendre(count);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int j = 0; j < count; ++j) {
    r.nodes[j] = mid + half * r.nodes[j];
    r.weights[j] *= half;
  }
  return r;
}

namespace {

void check_level(int level) {
  if (level < kMinLevel || level > kMaxLevel) {
    throw DomainError("quadrature level must be in [1, 6], got " + std::to_string(level));
  }
}

constexpr int kSpherePoints[] = {4, 8, 12, 16, 24, 32};
constexpr int kSolidPoints[] = {3, 5, 8, 11, 16, 22};

}  // namespace

int sphere_points_per_angle(int level) {
  check_level(level);
  return kSpherePoints[level - 1];
}

int solid_points_per_axis(int level) {
  check_level(level);
  return kSolidPoints[level - 1];
}

QuadratureRule unit_sphere_rule(int dim, int count) {
  if (dim < 2) throw InvalidDimension("unit_sphere_rule: dimension must be >= 2");
  if (count < 1) throw DomainError("unit_sphere_rule: need at least one node per angle");
  QuadratureRule rule;
  rule.dim = dim;
  rule.target = QuadratureTarget::boundary;
  rule.order_tag = 2 * count - 1;

  // S^1: equally spaced azimuth.
  const int azimuth = 2 * count;
  std::vector<double> pts;
  std::vector<double> wts;
  for (int k = 0; k < azimuth; ++k) {
    const double phi = 2.0 * kPi * (k + 0.5) / azimuth;
    pts.push_back(std::cos(phi));
    pts.push_back(std::sin(phi));
    wts.push_back(2.0 * kPi / azimuth);
  }
  // Lift S^{m-2} to S^{m-1}: x = (t, sqrt(1 - t^2) y), dS = (1-t^2)^{(m-3)/2} dt dS'.
  for (int m = 3; m <= dim; ++m) {
    const double a = 0.5 * (m - 3);
    const GaussRule1D polar = gauss_jacobi(count, a, a);
    const int prev = m - 1;
    const std::size_t prev_count = wts.size();
    std::vector<double> next_pts;
    std::vector<double> next_wts;
    next_pts.reserve(prev_count * count * m);
    next_wts.reserve(prev_count * count);
    for (int i = 0; i < count; ++i) {
      const double t = polar.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (std::size_t j = 0; j < prev_count; ++j) {
        next_pts.push_back(t);
        for (int c = 0; c < prev; ++c) next_pts.push_back(s * pts[j * prev + c]);
        next_wts.push_back(polar.weights[i] * wts[j]);
      }
    }
    pts = std::move(next_pts);
    wts = std::move(next_wts);
  }
  rule.nodes = pts;
  rule.normals = std::move(pts);
  rule.weights = std::move(wts);
  return rule;
}

QuadratureRule unit_ball_rule(int dim, int count) {
  const QuadratureRule sphere = unit_sphere_rule(dim, count);
  // r = (1 + s)/2, r^{dim-1} dr = 2^{-dim} (1 + s)^{dim-1} ds.
  const GaussRule1D radial = gauss_jacobi(count, 0.0, dim - 1.0);
  const double scale = std::ldexp(1.0, -dim);
  QuadratureRule rule;
  rule.dim = dim;
  rule.target = QuadratureTarget::interior;
  rule.order_tag = 2 * count - 1;
  rule.nodes.reserve(radial.nodes.size() * sphere.size() * dim);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = 0.5 * (1.0 + radial.nodes[i]);
    for (std::size_t j = 0; j < sphere.size(); ++j) {
      const auto u = sphere.node(j);
      for (int c = 0; c < dim; ++c) rule.nodes.push_back(r * u[c]);
      rule.weights.push_back(scale * radial.weights[i] * sphere.weights[j]);
    }
  }
  return rule;
}

}  // namespace carleman
