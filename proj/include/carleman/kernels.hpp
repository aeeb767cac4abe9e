#pragma once

#include <span>
#include <vector>

#include "carleman/domain.hpp"
#include "carleman/quadrature.hpp"
#include "carleman/test_function.hpp"

namespace carleman {

// Dirichlet Green function of the ball, sign fixed so that
// int G(x, y) dy = u(x) solves Delta u = 1, u = 0 on the boundary. Hence
// G <= 0, f = int G Delta f + int (dG/dnu_y) f dS, and the Poisson kernel is
// +dG/dnu_y. On the unit ball of R^n, n >= 3:
//   G(x, y) = -(|x-y|^{2-n} - (1 - 2 x.y + |x|^2 |y|^2)^{(2-n)/2}) / ((n-2) omega_n).
// Throws SingularEvaluation for x == y and DomainError outside the closed ball
// (x must be interior).
double green_ball(int n, std::span<const double> x, std::span<const double> y);
// Gradient in y.
std::vector<double> green_ball_gradient(int n, std::span<const double> x, std::span<const double> y);
// (1 - |x|^2) / (omega_n |x - zeta|^n).
double poisson_kernel_ball(int n, std::span<const double> x, std::span<const double> zeta);

// Any ball, by translation and scaling of the unit-ball formulas.
double green_ball(const Domain& ball, std::span<const double> x, std::span<const double> y);
std::vector<double> green_ball_gradient(const Domain& ball, std::span<const double> x,
                                        std::span<const double> y);
double poisson_kernel_ball(const Domain& ball, std::span<const double> x,
                           std::span<const double> zeta);

// (4 pi t)^{-m/2} exp(-|x-y|^2 / (4t)), m = x.size().
double heat_kernel_free(int m, double t, std::span<const double> x, std::span<const double> y);

// Bound on the neglected part of the 1-D Dirichlet sine series on [0, L]
// after K terms: (2/L) e^{-c (K+1)^2} / (1 - e^{-c (2K+3)}), c = (pi/L)^2 t.
double heat_series_tail(double length, double t, int truncation);
// Smallest K with heat_series_tail < tol.
int heat_series_truncation(double length, double t, double tol = 1e-12);

inline constexpr double kHeatTailTolerance = 1e-12;

// Dirichlet heat kernel of the box as a product of 1-D sine series.
// truncation = 0 picks the smallest K whose tail bound is below 1e-12 on every
// axis; an explicit K that misses it throws TailBoundError.
double heat_kernel_box(const Domain& box, double t, std::span<const double> x,
                       std::span<const double> y, int truncation = 0);

struct EigenPair {
  std::vector<int> index;
  double eigenvalue;
  double sup_value;  // sup |phi| of the L^2-normalized eigenfunction
  double l2_norm;
};

// First `count` Dirichlet eigenpairs of -Delta on the box, ascending, ties
// broken by the multi-index.
std::vector<EigenPair> box_eigenpairs(const Domain& box, int count);

// Right side of the Green representation
// f(x) = int G(x,y) Delta f(y) dy + int P(x,zeta) f(zeta) dS(zeta)
// on a ball; the volume term uses the polar rule centred at x.
Complex green_rep_interior(const TestFunction& f, const Domain& ball,
                           std::span<const double> x, int level);

// B_Omega g(x) = int G(x,y) g(y) dy from samples on an interior rule. When
// x is a node its cell is replaced by the equal-volume ball around x,
// integrated exactly for the singular part.
double b_omega(std::span<const double> samples, const Domain& ball, const QuadratureRule& rule,
               std::span<const double> x);
// B_Omega g(x) for an evaluable g, through the polar rule centred at x.
double b_omega(const std::function<double(std::span<const double>)>& g, const Domain& ball,
               std::span<const double> x, int level);
// B_dOmega g(x) = int P(x, zeta) g(zeta) dS(zeta) from boundary samples.
double b_boundary(std::span<const double> samples, const Domain& ball,
                  const QuadratureRule& boundary_rule, std::span<const double> x);

}  // namespace carleman
