#include <gtest/gtest.h>
#include <omp.h>

#include "carleman/domain.hpp"
#include "carleman/parallel.hpp"
#include "carleman/random.hpp"
#include "carleman/verify.hpp"

using namespace carleman;

namespace {

class ParallelTest : public ::testing::Test {
 protected:
  void SetUp() override { omp_set_num_threads(4); }
};

}  // namespace

TEST_F(ParallelTest, RieszBitIdentical) {
  const QuadratureRule rule = interior_quadrature(Domain::unit_ball(4), 3);
  SplitMix64 rng(9);
  std::vector<std::vector<double>> sets(3, std::vector<double>(rule.size()));
  for (auto& s : sets) {
    for (double& v : s) v = rng.uniform();
  }
  const auto a = riesz_at_nodes(rule, 2.0, sets, ExecutionPolicy::serial);
  const auto b = riesz_at_nodes(rule, 2.0, sets, ExecutionPolicy::parallel);
  EXPECT_EQ(a, b);
}

TEST_F(ParallelTest, BoundaryPotentialBitIdentical) {
  const Domain d = Domain::unit_ball(3);
  const QuadratureRule bd = boundary_quadrature(d, 4);
  const QuadratureRule in = interior_quadrature(d, 3);
  std::vector<double> f(bd.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1.0 + bd.node(i)[2];
  EXPECT_EQ(boundary_potential_at_nodes(bd, f, in, ExecutionPolicy::serial),
            boundary_potential_at_nodes(bd, f, in, ExecutionPolicy::parallel));
}

TEST_F(ParallelTest, VerifierJsonIdentical) {
  const Domain b = Domain::unit_ball(3);
  EXPECT_EQ(to_json({verify_riesz(b, 1.0, 2.0, 4, 3, 1, ExecutionPolicy::serial)}),
            to_json({verify_riesz(b, 1.0, 2.0, 4, 3, 1, ExecutionPolicy::parallel)}));
  EXPECT_EQ(to_json(verify_green_bounds(4, std::nullopt, 500, 2, ExecutionPolicy::serial)),
            to_json(verify_green_bounds(4, std::nullopt, 500, 2, ExecutionPolicy::parallel)));
  const auto fam = boundary_density_family(b, 5, 2);
  EXPECT_EQ(to_json({verify_weak_type(b, std::span<const BoundaryDensity>(fam), 3, ExecutionPolicy::serial)}),
            to_json({verify_weak_type(b, std::span<const BoundaryDensity>(fam), 3, ExecutionPolicy::parallel)}));
}

TEST_F(ParallelTest, MapPreservesOrder) {
  const auto v = parallel_map<int>(1000, [](std::size_t i) { return static_cast<int>(i * i % 97); },
                                   ExecutionPolicy::parallel);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i % 97));
}
