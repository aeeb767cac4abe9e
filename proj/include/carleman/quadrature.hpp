#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace carleman {

enum class QuadratureTarget { interior, boundary };

// Nodes and positive weights, stored flat with stride `dim`. Boundary rules
// also carry the outward unit normal at each node.
struct QuadratureRule {
  int dim = 0;
  QuadratureTarget target = QuadratureTarget::interior;
  int level = 0;
  // Polynomial degree integrated exactly (tensor/product rules), or the
  // node count for sampled rules.
  int order_tag = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> normals;

  std::size_t size() const { return weights.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes.data() + i * dim, static_cast<std::size_t>(dim)};
  }
  std::span<const double> normal(std::size_t i) const {
    return {normals.data() + i * dim, static_cast<std::size_t>(dim)};
  }
  double weight_sum() const;
};

struct GaussRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1]
// (Golub-Welsch). alpha = beta = 0 is Gauss-Legendre.
GaussRule1D gauss_jacobi(int count, double alpha, double beta);
GaussRule1D gauss_legendre(int count);
// Gauss-Legendre mapped to [a, b].
GaussRule1D gauss_legendre(int count, double a, double b);

inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 6;

// Fixed level tables: polar-angle count for sphere rules, and the per-axis
// count for ball (radial and angular) and box rules.
int sphere_points_per_angle(int level);
int solid_points_per_axis(int level);

// Product rule on the unit sphere S^{dim-1}: Gauss-Jacobi in each polar
// cosine, trapezoid in the azimuth. Exact for polynomials of degree
// <= 2 * count - 1.
QuadratureRule unit_sphere_rule(int dim, int count);
// Radial Gauss-Jacobi (weight r^{dim-1}) times the sphere rule.
QuadratureRule unit_ball_rule(int dim, int count);

}  // namespace carleman
