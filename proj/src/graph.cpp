#include "cutcover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cutcover {

CapGraph::CapGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n > kMaxVertices) throw std::invalid_argument("graph has more than 64 vertices");
  for (const auto& e : edges_) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has an endpoint outside [0, n)");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.cap < 0) throw std::invalid_argument("negative edge capacity");
  }
}

Instance::Instance(CapGraph graph, Rational lambda, std::vector<Link> links)
    : graph_(std::move(graph)), lambda_(std::move(lambda)), links_(std::move(links)) {
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    if (l.id != i) throw std::invalid_argument("link ids must equal their list position");
    if (l.a >= graph_.n() || l.b >= graph_.n())
      throw std::invalid_argument("link " + std::to_string(i) + " has an endpoint outside [0, n)");
    if (l.a == l.b) throw std::invalid_argument("link " + std::to_string(i) + " is a loop");
    if (l.cost < 0) throw std::invalid_argument("link " + std::to_string(i) + " has negative cost");
  }
}

std::vector<Link> make_links(std::span<const std::tuple<std::size_t, std::size_t, Rational>> specs) {
  std::vector<Link> links;
  links.reserve(specs.size());
  for (const auto& [a, b, cost] : specs) links.push_back(Link{a, b, cost, links.size()});
  return links;
}

Rational cut_capacity(const CapGraph& g, NodeSet s) {
  Rational total = 0;
  for (const auto& e : g.edges())
    if (s.contains(e.u) != s.contains(e.v)) total += e.cap;
  return total;
}

std::vector<std::size_t> delta_links(NodeSet s, std::span<const Link> links) {
  std::vector<std::size_t> ids;
  for (const auto& l : links)
    if (l.covers(s)) ids.push_back(l.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_covered(NodeSet s, std::span<const Link> links) {
  for (const auto& l : links)
    if (l.covers(s)) return true;
  return false;
}

std::vector<Link> select_links(std::span<const Link> all, std::span<const std::size_t> ids) {
  std::vector<Link> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(all[id]);
  return out;
}

Rational total_cost(std::span<const Link> all, std::span<const std::size_t> ids) {
  Rational total = 0;
  for (auto id : ids) total += all[id].cost;
  return total;
}

}  // namespace cutcover
