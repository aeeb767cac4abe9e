#include <gtest/gtest.h>

#include <cmath>

#include "carleman/errors.hpp"
#include "carleman/random.hpp"
#include "carleman/test_function.hpp"

using namespace carleman;

namespace {

std::vector<double> random_points(int dim, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> pts;
  for (int i = 0; i < count; ++i) {
    const auto x = rng.in_ball(dim);
    pts.insert(pts.end(), x.begin(), x.end());
  }
  return pts;
}

}  // namespace

TEST(Polynomial, ParseAndEvaluate) {
  const Polynomial p = Polynomial::parse(3, "x1^2-x2^2+2*x3*x1-0.5");
  const std::vector<double> x = {1.0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(p(x).real(), 1 - 4 + 6 - 0.5);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.laplacian().terms().size(), 0u);
  try {
    Polynomial::parse(3, "x1+x4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.col, 4);
  }
  EXPECT_THROW(Polynomial::parse(2, "x1^"), ParseError);
}

TEST(Polynomial, Calculus) {
  const Polynomial p = Polynomial::parse(2, "x1^3*x2+x2^2");
  const std::vector<double> x = {0.7, -1.3};
  EXPECT_NEAR(p.derivative(0)(x).real(), 3 * 0.49 * -1.3, 1e-14);
  EXPECT_NEAR(p.derivative(1)(x).real(), 0.343 + 2 * -1.3, 1e-14);
  EXPECT_NEAR(p.laplacian()(x).real(), 6 * 0.7 * -1.3 + 2, 1e-14);
}

TEST(TestFunctions, HarmonicGeneratorIsHarmonic) {
  for (int dim : {3, 4}) {
    for (int degree = 1; degree <= 4; ++degree) {
      const TestFunction f = TestFunction::harmonic(dim, degree, 100 + degree);
      EXPECT_TRUE(f.harmonic());
      EXPECT_TRUE(f.real_valued());
      const auto pts = random_points(dim, 100, degree);
      // Central differences are exact up to roundoff through degree 3; the
      // quartic leaves an O(h^2) truncation term.
      EXPECT_LT(max_fd_laplacian(f, pts, dim), degree < 4 ? 1e-6 : 1e-5) << dim << " " << degree;
    }
  }
}

TEST(TestFunctions, ShippedHarmonicPolynomials) {
  for (const char* d : {"poly dim=4 expr=x1*x2", "poly dim=4 expr=x1^2-x2^2",
                        "poly dim=4 expr=x1^3-3*x1*x2^2", "poly dim=3 expr=x1*x2*x3",
                        "poly dim=4 expr=x1*x3-x2*x4"}) {
    const TestFunction f = parse_test_function(d);
    EXPECT_TRUE(f.harmonic()) << d;
    EXPECT_LT(max_fd_laplacian(f, random_points(f.dim(), 100, 9), f.dim()), 1e-6) << d;
  }
}

TEST(TestFunctions, HolomorphicMonomialsSatisfyCauchyRiemann) {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 5; ++b) {
      const TestFunction f = TestFunction::holo_monomial({a, b});
      EXPECT_TRUE(f.holomorphic());
      EXPECT_LT(max_cauchy_riemann_residual(f, random_points(4, 100, a * 7 + b), 4), 1e-10);
    }
  }
  // z1-bar is not holomorphic; the residual sees it.
  const TestFunction conj = TestFunction::from_polynomial(Polynomial::parse(4, "x1") +
                                                          Polynomial::constant(4, {0, -1}) *
                                                              Polynomial::coordinate(4, 1));
  EXPECT_GT(max_cauchy_riemann_residual(conj, random_points(4, 10, 1), 4), 0.5);
}

TEST(TestFunctions, RadialLaplacian) {
  const TestFunction f = TestFunction::radial(4.0);
  const std::vector<double> x = {0.3, -0.2, 0.5};
  const double r2 = 0.09 + 0.04 + 0.25;
  EXPECT_NEAR(f.value(x).real(), r2 * r2, 1e-15);
  EXPECT_NEAR(f.laplacian(x).real(), 4 * (4 + 3 - 2) * r2, 1e-13);
  EXPECT_LT(std::abs(max_fd_laplacian(f, x, 3) - f.laplacian(x).real()), 1e-5);
}

TEST(TestFunctions, ParseRoundTrip) {
  for (const char* d : {"harmonic dim=3 degree=2 seed=7", "holo dim=2 alpha=3,2", "radial s=2",
                        "poly dim=4 expr=x1*x2", "const dim=3 c=1.5", "poly dim=4 expr=0.5*x1^2*x3^2+x4"}) {
    const TestFunction f = parse_test_function(d);
    const TestFunction g = parse_test_function(f.descriptor());
    EXPECT_EQ(g.descriptor(), f.descriptor()) << d;
    const std::vector<double> x = {0.1, 0.2, -0.3, 0.4};
    const std::span<const double> xs(x.data(), f.dim() == 0 ? 3 : f.dim());
    EXPECT_EQ(f.value(xs), g.value(xs)) << d;
  }
  EXPECT_THROW(parse_test_function("wave dim=3"), ParseError);
  EXPECT_THROW(parse_test_function("holo dim=2 alpha=1"), ParseError);
}

TEST(TestFunctions, CustomAndScaled) {
  const TestFunction f = TestFunction::custom(
      2, [](auto x) { return Complex(x[0] * x[0], 0); }, [](auto) { return Complex(2, 0); });
  const std::vector<double> x = {3.0, 1.0};
  EXPECT_EQ(f.value(x).real(), 9.0);
  EXPECT_EQ(f.scaled(2.0).laplacian(x).real(), 4.0);
  const std::vector<double> y = {3.0, 1.0, 0.5};
  EXPECT_EQ(TestFunction::constant(3, 2.0).scaled(3.0).value(y).real(), 6.0);
}
