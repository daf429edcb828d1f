#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cutcover/graph.hpp"
#include "cutcover/primal_dual.hpp"

namespace cutcover::testing {

inline CapGraph cycle_graph(std::size_t n, long long cap = 1) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n, Rational(cap)});
  return CapGraph(n, std::move(edges));
}

inline std::vector<Link> links_of(std::initializer_list<std::tuple<std::size_t, std::size_t, long long>> specs) {
  std::vector<Link> out;
  for (const auto& [a, b, c] : specs) out.push_back(Link{a, b, Rational(c), out.size()});
  return out;
}

/// Random multigraph with integer capacities in [1, max_cap].
inline CapGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, int max_cap) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> cap(1, max_cap);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng) < density) edges.push_back(Edge{a, b, Rational(cap(rng))});
  return CapGraph(n, std::move(edges));
}

inline std::vector<Link> random_links(std::mt19937_64& rng, std::size_t n, std::size_t count, int max_cost) {
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  std::uniform_int_distribution<int> cost(0, max_cost);
  std::vector<Link> out;
  while (out.size() < count) {
    const auto a = vertex(rng), b = vertex(rng);
    if (a != b) out.push_back(Link{a, b, Rational(cost(rng)), out.size()});
  }
  return out;
}

/// Brute-force minimum cover over all 2^|L| link subsets.
inline std::optional<Rational> naive_optimum(const SetFamily& f, const std::vector<Link>& links) {
  std::optional<Rational> best;
  const std::uint64_t subsets = std::uint64_t{1} << links.size();
  for (std::uint64_t pick = 0; pick < subsets; ++pick) {
    bool ok = true;
    for (const auto& s : f) {
      bool hit = false;
      for (std::size_t i = 0; i < links.size() && !hit; ++i) hit = ((pick >> i) & 1U) && links[i].covers(s);
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Rational cost = 0;
    for (std::size_t i = 0; i < links.size(); ++i)
      if ((pick >> i) & 1U) cost += links[i].cost;
    if (!best || cost < *best) best = cost;
  }
  return best;
}

inline bool feasible(const SetFamily& f, const std::vector<Link>& links) {
  for (const auto& s : f)
    if (!is_covered(s, links)) return false;
  return true;
}

}  // namespace cutcover::testing
