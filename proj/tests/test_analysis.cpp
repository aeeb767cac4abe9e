#include <gtest/gtest.h>

#include <cmath>

#include "carleman/analysis.hpp"
#include "carleman/domain.hpp"
#include "carleman/errors.hpp"
#include "carleman/random.hpp"
#include "carleman/special.hpp"

using namespace carleman;

TEST(LpNorm, Examples) {
  const Domain b3 = Domain::unit_ball(3);
  EXPECT_NEAR(lp_norm(TestFunction::constant(3, 1.0), interior_quadrature(b3, 4), 2.0),
              std::sqrt(4 * kPi / 3), 1e-12);
  EXPECT_NEAR(lp_norm(TestFunction::radial(1.0), interior_quadrature(b3, 4), 1.0), kPi, 1e-12);
  const QuadratureRule s3 = boundary_quadrature(Domain::unit_ball(4), 4);
  EXPECT_NEAR(lp_norm(TestFunction::holo_monomial({1, 0}), s3, 2.0), kPi, 1e-12);
  EXPECT_THROW(lp_norm(TestFunction::constant(4, 1.0), interior_quadrature(b3, 2), 2.0), InvalidDimension);
}

TEST(LpNorm, MonotoneInPOnProbabilityRules) {
  QuadratureRule r = interior_quadrature(Domain::unit_ball(4), 3);
  const double total = r.weight_sum();
  for (double& w : r.weights) w /= total;
  SplitMix64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const TestFunction f = TestFunction::harmonic(4, 1 + t % 4, 50 + t);
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 8.0}) {
      const double v = lp_norm(f, r, p);
      EXPECT_GE(v + 1e-12, prev);
      prev = v;
    }
  }
}

TEST(WeakLpNorm, Examples) {
  const std::vector<double> ind = {1, 1, 1, 0};
  const std::vector<double> w = {0.5, 1.0, 1.5, 7.0};
  EXPECT_NEAR(weak_lp_norm(ind, w, 2.0), std::sqrt(3.0), 1e-15);
  const std::vector<double> c = {2, 2, 2};
  const std::vector<double> wc = {1, 2, 3};
  EXPECT_NEAR(weak_lp_norm(c, wc, 3.0), 2 * std::cbrt(6.0), 1e-14);
  const std::vector<double> two = {2, 1};
  const std::vector<double> w2 = {1, 8};
  EXPECT_DOUBLE_EQ(weak_lp_norm(two, w2, 1.0), 9.0);
  EXPECT_THROW(weak_lp_norm({}, {}, 1.0), EmptyInput);
}

TEST(WeakLpNorm, BoundedByStrongNorm) {
  SplitMix64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(1, 50);
    std::vector<double> v(n), w(n);
    for (int i = 0; i < n; ++i) {
      v[i] = rng.uniform() < 0.2 ? 0.0 : std::exp(rng.uniform(-3, 3));
      w[i] = rng.uniform(0.01, 2.0);
    }
    for (double p : {1.0, 1.5, 4.0}) EXPECT_LE(weak_lp_norm(v, w, p), lp_norm(v, w, p) * (1 + 1e-12));
  }
}

TEST(Riesz, CenterValues) {
  const auto one = [](std::span<const double>) { return 1.0; };
  const std::vector<double> c4(4, 0.0), c3(3, 0.0);
  for (int level = 4; level <= 6; ++level) {
    EXPECT_NEAR(riesz_potential(one, Domain::unit_ball(4), 2.0, c4, level) / (kPi * kPi), 1.0, 1e-6);
    EXPECT_NEAR(riesz_potential(one, Domain::unit_ball(3), 1.0, c3, level) / (4 * kPi), 1.0, 1e-6);
  }
  // Kernel tends to 1 as a -> n, so I_a 1 tends to the volume.
  EXPECT_NEAR(riesz_potential(one, Domain::unit_ball(3), 2.999, c3, 4), 4 * kPi / 3, 2e-3);
  EXPECT_THROW(riesz_potential(one, Domain::unit_ball(3), 3.0, c3, 4), DomainError);
}

TEST(Riesz, SampledVersionIsLinearAndMonotone) {
  const QuadratureRule r = interior_quadrature(Domain::unit_ball(3), 3);
  SplitMix64 rng(4);
  std::vector<double> f(r.size()), g(r.size()), sum(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    f[i] = rng.uniform();
    g[i] = f[i] + rng.uniform();
    sum[i] = 2 * f[i] + 3 * g[i];
  }
  for (std::size_t i = 0; i < r.size(); i += 37) {
    const double rf = riesz_potential_at_node(f, r, 1.0, i);
    const double rg = riesz_potential_at_node(g, r, 1.0, i);
    EXPECT_LE(rf, rg);
    EXPECT_NEAR(riesz_potential_at_node(sum, r, 1.0, i), 2 * rf + 3 * rg, 1e-12 * (2 * rf + 3 * rg));
    EXPECT_EQ(riesz_potential(f, r, 1.0, r.node(i)), rf);
  }
  const std::vector<double> ones(r.size(), 1.0);
  const std::vector<double> center(3, 0.0);
  EXPECT_NEAR(riesz_potential(ones, r, 1.0, center) / (4 * kPi), 1.0, 3e-2);
}

TEST(Riesz, SampledCenterValueConverges) {
  // The singular integrand is not polynomial in the radial variable, so the
  // sampled sum only converges at first order in the per-axis count.
  const std::vector<double> center(3, 0.0);
  double prev = INFINITY;
  for (int level = 1; level <= 6; ++level) {
    const QuadratureRule r = interior_quadrature(Domain::unit_ball(3), level);
    const std::vector<double> ones(r.size(), 1.0);
    const double err = std::abs(riesz_potential(ones, r, 1.0, center) / (4 * kPi) - 1.0);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 5e-3);
}

TEST(BoundaryPotential, Examples) {
  const Domain b = Domain::unit_ball(3);
  const QuadratureRule s = boundary_quadrature(b, 4);
  const std::vector<double> ones(s.size(), 1.0), twos(s.size(), 2.0);
  const std::vector<double> center(3, 0.0);
  EXPECT_NEAR(boundary_potential(ones, s, center), 4 * kPi, 1e-12);
  double prev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const std::vector<double> x = {0.08 * k + 0.013, 0.011, 0.007};
    const double v = boundary_potential(ones, s, b, x);
    EXPECT_GT(v, prev);
    EXPECT_NEAR(boundary_potential(twos, s, b, x), 2 * v, 1e-12 * v);
    prev = v;
  }
  EXPECT_THROW(boundary_potential(ones, s, s.node(3)), SingularEvaluation);
  EXPECT_THROW(boundary_potential(ones, s, b, std::vector<double>{1.0, 0.0, 0.0}), SingularEvaluation);
}

TEST(MaximalFunction, Examples) {
  const Domain box = Domain::unit_box(2);
  const std::vector<double> radii = {0.02, 0.05, 0.1, 0.3};
  const GridFunction c = sample_on_grid(box, {40, 40}, [](auto) { return 3.0; });
  const std::vector<double> x = {0.3, 0.6};
  EXPECT_NEAR(maximal_function_oracle(c, x, radii), 3.0, 1e-14);
  const GridFunction half = sample_on_grid(box, {40, 40}, [](auto y) { return y[0] < 0.5 ? 1.0 : 0.0; });
  EXPECT_NEAR(maximal_function_oracle(half, std::vector<double>{0.2, 0.5}, radii), 1.0, 1e-14);
  const GridFunction bump = sample_on_grid(box, {30, 30}, [](auto y) { return std::sin(7 * y[0]) * y[1]; });
  SplitMix64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> p = bump.cell_center(static_cast<std::size_t>(rng.uniform_int(0, 899)));
    EXPECT_GE(maximal_function_oracle(bump, p, radii) + 1e-14, std::abs(bump.values[bump.cell_of(p)]));
  }
}
