#include "carleman/parallel.hpp"

#include <cmath>

#include "carleman/analysis.hpp"
#include "carleman/errors.hpp"
#include "carleman/special.hpp"
#include "carleman/summation.hpp"

namespace carleman {

std::vector<std::vector<double>> riesz_at_nodes(const QuadratureRule& rule, double a,
                                                const std::vector<std::vector<double>>& samples,
                                                ExecutionPolicy policy) {
  const int n = rule.dim;
  if (!(a > 0.0 && a < n)) throw DomainError("Riesz order a must lie in (0, n)");
  for (const auto& s : samples) {
    if (s.size() != rule.size()) throw DomainError("sample count differs from rule size");
  }
  const std::size_t sets = samples.size();
  const double e = 0.5 * (a - n);
  const double omega = surface_area(n);
  auto row = [&](std::size_t i) {
    std::vector<NeumaierSum> acc(sets);
    const auto x = rule.node(i);
    for (std::size_t j = 0; j < rule.size(); ++j) {
      double k;
      if (j == i) {
        const double rho = std::pow(n * rule.weights[i] / omega, 1.0 / n);
        k = omega * std::pow(rho, a) / a;
      } else {
        const auto y = rule.node(j);
        double r2 = 0.0;
        for (int c = 0; c < n; ++c) r2 += (x[c] - y[c]) * (x[c] - y[c]);
        if (r2 == 0.0) continue;
        k = rule.weights[j] * std::pow(r2, e);
      }
      for (std::size_t s = 0; s < sets; ++s) acc[s].add(k * std::abs(samples[s][j]));
    }
    std::vector<double> out(sets);
    for (std::size_t s = 0; s < sets; ++s) out[s] = acc[s].value();
    return out;
  };
  const auto by_node = parallel_map<std::vector<double>>(rule.size(), row, policy);
  std::vector<std::vector<double>> out(sets, std::vector<double>(rule.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t s = 0; s < sets; ++s) out[s][i] = by_node[i][s];
  }
  return out;
}

std::vector<double> boundary_potential_at_nodes(const QuadratureRule& boundary,
                                                std::span<const double> samples,
                                                const QuadratureRule& targets,
                                                ExecutionPolicy policy) {
  if (boundary.dim != targets.dim) throw InvalidDimension("rule dimensions differ");
  return parallel_map<double>(
      targets.size(),
      [&](std::size_t i) { return boundary_potential(samples, boundary, targets.node(i)); },
      policy);
}

}  // namespace carleman
