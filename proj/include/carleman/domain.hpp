#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carleman/quadrature.hpp"
#include "carleman/random.hpp"

namespace carleman {

enum class DomainKind { ball, box, ellipsoid };

std::string to_string(DomainKind k);

// User-supplied normal-map Lipschitz constant, used to exercise the
// non-convex max{8, LD} branch on a built-in shape.
struct GeometryOverride {
  double lc;
  bool convex;
  friend bool operator==(const GeometryOverride&, const GeometryOverride&) = default;
};

// Model domain: a ball, an axis-aligned box, or a centered axis-aligned
// ellipsoid. Immutable after construction.
class Domain {
 public:
  static Domain ball(std::vector<double> center, double radius);
  static Domain unit_ball(int dim);
  static Domain box(std::vector<double> lower, std::vector<double> upper);
  static Domain unit_box(int dim);
  static Domain ellipsoid(std::vector<double> semi_axes);

  Domain with_override(GeometryOverride o) const;

  DomainKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(a_.size()); }
  // Ball: center; box: lower corner; ellipsoid: origin.
  const std::vector<double>& center() const { return a_; }
  double radius() const { return radius_; }
  const std::vector<double>& lower() const { return a_; }
  const std::vector<double>& upper() const { return b_; }
  const std::vector<double>& semi_axes() const { return b_; }
  const std::optional<GeometryOverride>& geometry_override() const { return override_; }

  bool contains(std::span<const double> x, double tol = 0.0) const;
  // Config-grammar rendering, e.g. "ball dim=3 r=1".
  std::string descriptor() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  DomainKind kind_ = DomainKind::ball;
  std::vector<double> a_;
  std::vector<double> b_;
  double radius_ = 0.0;
  std::optional<GeometryOverride> override_;
};

struct GeometryParams {
  int dim;
  double diam;
  double volume;
  double boundary_area;
  bool convex;
  // Lipschitz constant of the outward normal; absent when the boundary is
  // not C^2 (box).
  std::optional<double> lc;
  double ld;
};

GeometryParams geometry(const Domain& d);

// Lower estimate of the normal-map Lipschitz constant from sampled boundary
// pairs. nullopt marks a boundary that is not C^2 (box).
std::optional<double> lc_estimate(const Domain& d, int sample_pairs,
                                  std::uint64_t seed = kDefaultSeed);

// Distance to the boundary for x in the closure; DomainError outside.
double dist_to_boundary(const Domain& d, std::span<const double> x);
// Nearest boundary point to x (x in the closure).
std::vector<double> nearest_boundary_point(const Domain& d, std::span<const double> x);
// Outward unit normal at a boundary point (ball/ellipsoid, or box face).
std::vector<double> outward_normal(const Domain& d, std::span<const double> boundary_point);

QuadratureRule interior_quadrature(const Domain& d, int level);
QuadratureRule boundary_quadrature(const Domain& d, int level);

// Parses "ball dim=3 r=1", "box dim=4 edges=1,1,1,1", "ellipsoid axes=2,1,1",
// each optionally followed by "override lc=<v> convex=false".
// Throws ParseError with a column (1-based, line 0).
Domain parse_domain(const std::string& descriptor);

}  // namespace carleman
