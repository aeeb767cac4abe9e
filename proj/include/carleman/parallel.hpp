#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "carleman/quadrature.hpp"

namespace carleman {

// Serial is the reference path. Parallel splits the loop over output
// elements only; each element is computed by the same code in the same
// order, so both policies give bit-identical results.
enum class ExecutionPolicy { serial, parallel };

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn, ExecutionPolicy policy) {
  std::vector<T> out(count);
  const auto n = static_cast<long long>(count);
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

// I_a of several sample sets at every node of the rule (self cell as in
// riesz_potential_at_node). Result is indexed [set][node].
std::vector<std::vector<double>> riesz_at_nodes(const QuadratureRule& rule, double a,
                                                const std::vector<std::vector<double>>& samples,
                                                ExecutionPolicy policy = ExecutionPolicy::parallel);

// J f at every node of `targets` from samples on the boundary rule.
std::vector<double> boundary_potential_at_nodes(const QuadratureRule& boundary,
                                                std::span<const double> samples,
                                                const QuadratureRule& targets,
                                                ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace carleman
