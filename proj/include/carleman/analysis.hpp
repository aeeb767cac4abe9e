#pragma once

#include <functional>
#include <span>
#include <vector>

#include "carleman/domain.hpp"
#include "carleman/quadrature.hpp"
#include "carleman/test_function.hpp"

namespace carleman {

// (sum w_i |f(x_i)|^p)^{1/p}.
double lp_norm(const TestFunction& f, const QuadratureRule& rule, double p);
double lp_norm(std::span<const double> values, std::span<const double> weights, double p);

// sup_t t * mu(|f| > t)^{1/p} for the discrete measure sum w_i delta_{x_i};
// evaluated at the sample values, where the sup is attained.
double weak_lp_norm(std::span<const double> values, std::span<const double> weights, double p);

// I_a f(x) = int |f(y)| |x-y|^{a-n} dy from samples of f on the rule nodes.
// When x is a node, its own cell is replaced by the exact radial integral
// over the equal-volume ball around x, times |f(x)|.
double riesz_potential(std::span<const double> samples, const QuadratureRule& rule, double a,
                       std::span<const double> x);
// Same at node i of the rule.
double riesz_potential_at_node(std::span<const double> samples, const QuadratureRule& rule,
                               double a, std::size_t i);

// Rule on a ball in polar coordinates centred at an interior point x:
// y = x + rho u, rho in [0, rho_max(u)], weights carry rho^{n-1}. Integrands
// with an |x-y|^{-k}, k < n, singularity at x are integrated to high order.
QuadratureRule polar_ball_rule(const Domain& ball, std::span<const double> x, int level);

// I_a f(x) for an evaluable f on a ball, through polar_ball_rule.
double riesz_potential(const std::function<double(std::span<const double>)>& f,
                       const Domain& ball, double a, std::span<const double> x, int level);

// J f(x) = int_{dOmega} |f(y)| |x-y|^{1-n} dS(y). Throws SingularEvaluation
// when x coincides with a boundary node.
double boundary_potential(std::span<const double> samples, const QuadratureRule& boundary_rule,
                          std::span<const double> x);
// As above; also throws SingularEvaluation when x lies on the boundary.
double boundary_potential(std::span<const double> samples, const QuadratureRule& boundary_rule,
                          const Domain& d, std::span<const double> x);

// Piecewise-constant function on a uniform grid of a box, one sample per
// cell centre, row-major with the last axis fastest.
struct GridFunction {
  Domain box;
  std::vector<int> cells;
  std::vector<double> values;

  std::size_t size() const;
  std::vector<double> cell_center(std::size_t index) const;
  double cell_volume() const;
  std::size_t cell_of(std::span<const double> x) const;
};

GridFunction sample_on_grid(const Domain& box, std::vector<int> cells,
                            const std::function<double(std::span<const double>)>& f);

// max over the radii of the mean of |f| over B(x, r) cut with the box, by
// summing cells whose centre lies in the ball. A radius that captures no
// cell centre uses the cell containing x.
double maximal_function_oracle(const GridFunction& f, std::span<const double> x,
                               std::span<const double> radii);

}  // namespace carleman
