#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cutcover/family.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/primal_dual.hpp"
#include "cutcover/rational.hpp"

namespace cutcover {

inline constexpr std::size_t kDefaultExactLinkLimit = 24;

struct ExactResult {
  Rational opt_cost;
  std::vector<std::size_t> opt_links;  // ascending
  std::uint64_t nodes_explored = 0;
};

struct Incumbent {
  Rational cost;
  std::vector<std::size_t> links;
};

/// Minimum-cost cover of `f` by branch-and-bound. Branches on the uncovered
/// core with the fewest available links and prunes on cost >= incumbent.
/// Throws TooManyLinks above `link_limit` and Infeasible when `f` cannot be
/// covered.
ExactResult exact_optimum(const Instance& inst, const SetFamily& f, std::optional<Incumbent> incumbent = std::nullopt,
                          std::size_t link_limit = kDefaultExactLinkLimit);

/// alg.cost / opt.opt_cost. A zero optimum yields 1 when alg.cost is also 0
/// and throws ZeroOptimumViolation otherwise.
Rational ratio(const SolveResult& alg, const ExactResult& opt);

}  // namespace cutcover
