#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carleman/constants.hpp"
#include "carleman/domain.hpp"
#include "carleman/parallel.hpp"
#include "carleman/random.hpp"
#include "carleman/report.hpp"
#include "carleman/test_function.hpp"

namespace carleman {

// Scalar specialization of the dbar-Laplacian: box = -Delta/2 on functions,
// so its Green kernel is this multiple of the classical one.
inline constexpr double kScalarGreenFormFactor = 2.0;
// For real phi on C^n: |dbar phi|^2 = (1/2) |grad phi|^2, with dz-bar_j of
// squared length 2.
inline constexpr double kDbarGradientFactor = 0.5;

// ||f||_{p*} <= delta1 ||Delta f||_{p#} + delta2 ||f||_{L^p(boundary)}.
// A domain without a C^2 boundary (box) goes through the convex constant.
VerificationReport verify_laplace_sobolev(const Domain& d, const TestFunction& f, double p,
                                          int level);

// ||f||_{p*} <= C ||f||_{L^p(boundary)} for holomorphic f on a domain in C^n.
VerificationReport verify_holomorphic_carleman(const Domain& d, const TestFunction& f, double p,
                                               int level);

// Worst ratio ||I_a f||_{np/(n-pa)} / (C ||f||_p) over `trials` functions:
// trial 0 is f = 1, the rest are random nonnegative Gaussian bumps.
VerificationReport verify_riesz(const Domain& d, double a, double p, int trials, int level,
                                std::uint64_t seed = kDefaultSeed,
                                ExecutionPolicy policy = ExecutionPolicy::parallel);

struct BoundaryDensity {
  std::string descriptor;
  std::function<double(std::span<const double>)> fn;
};

// f = 1, spherical caps and smooth bumps around random directions.
std::vector<BoundaryDensity> boundary_density_family(const Domain& d, int count,
                                                     std::uint64_t seed = kDefaultSeed);

// ||J f||_{L^{n/(n-1),inf}} <= n omega_n^{1-1/n} ||f||_{L^1(boundary)}.
VerificationReport verify_weak_type(const Domain& d, const BoundaryDensity& f, int level,
                                    ExecutionPolicy policy = ExecutionPolicy::parallel);
// Worst ratio over a density family.
VerificationReport verify_weak_type(const Domain& d, std::span<const BoundaryDensity> family,
                                    int level, ExecutionPolicy policy = ExecutionPolicy::parallel);

// Pointwise, boundary-decay and gradient bounds for the Green function of
// the unit ball in R^n over random pairs; three reports.
std::vector<VerificationReport> verify_green_bounds(int n, std::optional<double> ld_override,
                                                    int pairs, std::uint64_t seed = kDefaultSeed,
                                                    ExecutionPolicy policy = ExecutionPolicy::parallel);

// Eigenvalue lower bound and eigenfunction sup bound on the first `count`
// Dirichlet eigenpairs of a box in R^{2n}; two reports.
std::vector<VerificationReport> verify_eigen_bounds(const Domain& box, int count);

// Box heat kernel against 2^{n^2+4n+1} n diam^{2n} e^{-mu_1 t/2} t^{-n}.
VerificationReport verify_heat_bound(const Domain& box, std::span<const double> t_grid,
                                     int pairs, std::uint64_t seed = kDefaultSeed,
                                     int truncation = 0);

enum class GreenFormItem { pointwise, boundary };
std::string to_string(GreenFormItem i);

// Trivial-bundle, K = 0 case of the Green-form bounds on the unit ball of
// C^n: 2|G| <= C1 |x-y|^{2-2n} (pointwise) or 2|G| <= C2 |x-y|^{1-2n} delta(y).
// Statement-mode reports are informational.
VerificationReport verify_scalar_green_form(int n, GreenFormItem item, int pairs,
                                            ConstantMode mode, std::uint64_t seed = kDefaultSeed,
                                            ExecutionPolicy policy = ExecutionPolicy::parallel);

// sup_interior |f| <= growth * sup_boundary |f| for harmonic f; the rhs uses
// the weighted growth factor, the printed one goes into the notes.
VerificationReport verify_max_principle(const Domain& d, const TestFunction& f, int level,
                                        double k = 0.0);

// (1/2) sup_{B(rho/2)} |grad phi|^2 <= C11 / rho^2 sup_{B(2 rho)} |phi|^2 for
// a real harmonic phi on the unit ball of C^n, balls centred at the origin.
VerificationReport verify_gradient_interior(int n, const TestFunction& f, int level,
                                            double rho = 0.45);

// Descriptors of the shipped Laplace-side function suite in R^dim (20 entries).
std::vector<std::string> laplace_function_suite(int dim);

}  // namespace carleman
