#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "cutcover/node_set.hpp"
#include "cutcover/rational.hpp"

namespace cutcover {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational cap;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected capacitated multigraph. Immutable once built; the constructor
/// rejects self-loops, out-of-range endpoints and negative capacities.
class CapGraph {
 public:
  CapGraph() = default;
  CapGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const CapGraph&, const CapGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct Link {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational cost;
  std::size_t id = 0;

  /// Exactly one endpoint in `s`.
  bool covers(NodeSet s) const { return s.contains(a) != s.contains(b); }
  std::uint64_t endpoint_mask() const { return (std::uint64_t{1} << a) | (std::uint64_t{1} << b); }

  friend bool operator==(const Link&, const Link&) = default;
};

/// An ASC instance: graph, threshold and priced links. Link ids equal their
/// position in `links()`.
class Instance {
 public:
  Instance() = default;
  Instance(CapGraph graph, Rational lambda, std::vector<Link> links);

  const CapGraph& graph() const { return graph_; }
  std::size_t n() const { return graph_.n(); }
  const Rational& lambda() const { return lambda_; }
  const std::vector<Link>& links() const { return links_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  CapGraph graph_;
  Rational lambda_;
  std::vector<Link> links_;
};

/// Builds a link list with ids assigned by position.
std::vector<Link> make_links(std::span<const std::tuple<std::size_t, std::size_t, Rational>> specs);

/// Total capacity of edges with exactly one endpoint in `s`.
Rational cut_capacity(const CapGraph& g, NodeSet s);

/// Ids (ascending) of links with exactly one endpoint in `s`.
std::vector<std::size_t> delta_links(NodeSet s, std::span<const Link> links);

/// True when some link in `links` has exactly one endpoint in `s`.
bool is_covered(NodeSet s, std::span<const Link> links);

/// Links whose ids are listed, in list order.
std::vector<Link> select_links(std::span<const Link> all, std::span<const std::size_t> ids);

Rational total_cost(std::span<const Link> all, std::span<const std::size_t> ids);

}  // namespace cutcover
