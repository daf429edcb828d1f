#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cutcover/certify.hpp"
#include "cutcover/enumerate.hpp"
#include "cutcover/errors.hpp"
#include "support.hpp"

using namespace cutcover;
using cutcover::testing::cycle_graph;
using cutcover::testing::links_of;

namespace {

SetFamily family_of(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<NodeSet> out;
  for (auto s : sets) out.push_back(NodeSet::of(n, s));
  return SetFamily(n, out);
}

// Smallest member of l_star ∪ {V} containing c, by scanning all of them.
NodeSet smallest_container(NodeSet c, const SetFamily& l_star) {
  std::vector<NodeSet> containers{NodeSet::full(c.ground_size())};
  for (const auto& s : l_star)
    if (c.subset_of(s)) containers.push_back(s);
  return *std::min_element(containers.begin(), containers.end(),
                           [](NodeSet a, NodeSet b) { return a.popcount() < b.popcount(); });
}

}  // namespace

TEST_CASE("laminarity") {
  CHECK(is_laminar(family_of(4, {{0}, {0, 1}, {2}}).members()));
  CHECK_FALSE(is_laminar(family_of(4, {{0, 1}, {1, 2}}).members()));
  CHECK_THROWS_AS(LaminarFamily(4, family_of(4, {{0, 1}, {1, 2}}).members()), NotLaminar);
  CHECK(LaminarFamily(4, {}).size() == 0);
}

TEST_CASE("minimal_cover") {
  const auto links = links_of({{0, 1, 1}, {0, 2, 1}});
  CHECK(minimal_cover(std::vector<std::size_t>{0}, family_of(3, {{0}}), links) == std::vector<std::size_t>{0});
  CHECK(minimal_cover(std::vector<std::size_t>{0, 1}, SetFamily(3), links).empty());
  CHECK(is_inclusion_minimal(family_of(3, {{0}}), links, std::vector<std::size_t>{1}));
  CHECK_FALSE(is_inclusion_minimal(family_of(3, {{0}}), links, std::vector<std::size_t>{0, 1}));
  CHECK_FALSE(is_inclusion_minimal(family_of(3, {{1}}), links, std::vector<std::size_t>{1}));
}

TEST_CASE("build_tree") {
  SUBCASE("empty") {
    const auto t = build_tree(SetFamily(3));
    CHECK(t.sets.size() == 1);
    CHECK(t.sets[0] == NodeSet::full(3));
    CHECK(t.parent[0] == -1);
  }
  SUBCASE("chain") {
    const auto t = build_tree(family_of(3, {{0}, {0, 1}}));
    const auto a = t.index_of(NodeSet::of(3, {0}));
    const auto b = t.index_of(NodeSet::of(3, {0, 1}));
    CHECK(t.parent[a] == static_cast<int>(b));
    CHECK(t.parent[b] == 0);
    CHECK(t.children[0] == std::vector<std::size_t>{b});
  }
  SUBCASE("siblings") {
    const auto t = build_tree(family_of(3, {{0}, {2}}));
    CHECK(t.parent[1] == 0);
    CHECK(t.parent[2] == 0);
    CHECK(t.children[0].size() == 2);
  }
  SUBCASE("crossing input") {
    CHECK_THROWS_AS(build_tree(family_of(4, {{0, 1}, {1, 2}})), NotLaminar);
  }
}

TEST_CASE("psi_map") {
  const auto core = family_of(4, {{0}});
  CHECK(psi_map(core, SetFamily(4)).at(NodeSet::of(4, {0})) == NodeSet::full(4));
  CHECK(psi_map(core, family_of(4, {{0, 1}, {0, 1, 2}})).at(NodeSet::of(4, {0})) == NodeSet::of(4, {0, 1}));
  // {0,1} crosses {1,2} and {0,3} and sits inside neither.
  const auto c = family_of(5, {{0, 1}});
  CHECK(psi_map(c, family_of(5, {{1, 2}})).at(NodeSet::of(5, {0, 1})) == NodeSet::full(5));

  WitnessTree t = build_tree(family_of(4, {{0, 1}, {0, 1, 2}}));
  color_red(t, psi_map(core, family_of(4, {{0, 1}, {0, 1, 2}})));
  CHECK(t.red[t.index_of(NodeSet::of(4, {0, 1}))]);
  CHECK_FALSE(t.red[t.index_of(NodeSet::of(4, {0, 1, 2}))]);
  CHECK_FALSE(t.red[0]);
}

TEST_CASE("find_witness_laminar") {
  const auto links = links_of({{0, 2, 1}, {1, 3, 2}});
  const auto f = enumerate_small_cuts(cycle_graph(4), Rational(3));

  CHECK(find_witness_laminar(std::vector<std::size_t>{}, f, links).witness.empty());

  SUBCASE("single link") {
    const auto a = find_witness_laminar(std::vector<std::size_t>{0}, family_of(4, {{0}}), links);
    REQUIRE(a.witness.size() == 1);
    CHECK(a.witness.at(0) == NodeSet::of(4, {0}));
  }
  SUBCASE("4-cycle run, re-checked by brute force") {
    for (auto order : {WitnessOrder::smallest_first, WitnessOrder::largest_first}) {
      const std::vector<std::size_t> j{0, 1};
      const auto a = find_witness_laminar(j, f, links, order);
      REQUIRE(a.witness.size() == 2);
      for (const auto& [id, s] : a.witness) {
        CHECK(f.contains(s));
        CHECK(links[id].covers(s));
        for (auto other : j)
          if (other != id) CHECK_FALSE(links[other].covers(s));
      }
      const auto img = a.image();
      CHECK(laminar_pair(img[0], img[1]));
    }
  }
  SUBCASE("no candidate") {
    // Both links cover {0}; {0} has no witness of its own.
    const auto twin = links_of({{0, 1, 1}, {0, 2, 1}});
    CHECK_THROWS_AS(find_witness_laminar(std::vector<std::size_t>{0, 1}, family_of(3, {{0}}), twin),
                    WitnessSearchExhausted);
  }
  SUBCASE("budget") {
    CHECK_THROWS_AS(find_witness_laminar(std::vector<std::size_t>{0, 1}, f, links, WitnessOrder::smallest_first, 1),
                    SearchBudgetExceeded);
  }
}

TEST_CASE("crossing_density_audit on an empty phase") {
  const auto r = crossing_density_audit(0, SetFamily(4), WitnessAssignment{4, {}}, std::vector<Link>{});
  CHECK(r.num_cores == 0);
  CHECK(r.num_lstar == 0);
  CHECK(r.crossing_pairs == 0);
  CHECK(r.pass);
}

TEST_CASE("crossing_density_audit flags a witness crossing two cores") {
  // Cores {0,1} and {2,3}; the witness {1,2} crosses both.
  const auto f = family_of(5, {{0, 1}, {1, 2}, {2, 3}});
  const auto links = links_of({{2, 3, 1}});
  const WitnessAssignment a{5, {{0, NodeSet::of(5, {1, 2})}}};
  const auto r = crossing_density_audit(0, f, a, links);
  CHECK(r.crossing_pairs == 2);
  CHECK_FALSE(r.sparse_crossing);
  CHECK_FALSE(r.pass);
}

TEST_CASE("crossing_density_audit rejects invalid witnesses") {
  const auto f = family_of(4, {{0}, {1}});
  const auto links = links_of({{0, 1, 1}});
  const WitnessAssignment a{4, {{0, NodeSet::of(4, {2})}}};
  const auto r = crossing_density_audit(0, f, a, links);
  CHECK_FALSE(r.witness_valid);
  CHECK_FALSE(r.pass);
}

TEST_CASE("audits pass on every phase of random runs") {
  std::mt19937_64 rng(2024);
  int runs = 0;
  std::size_t phases = 0, nonempty_lstar = 0;
  while (runs < 120) {
    const std::size_t n = 4 + rng() % 5;
    const auto g = cutcover::testing::random_graph(rng, n, 0.5, 8);
    const auto values = cut_values(g);
    const Rational lambda = values[rng() % values.size()] + 1;
    const auto links = cutcover::testing::random_links(rng, n, 3 + rng() % 10, 8);
    const auto f = enumerate_small_cuts(g, lambda);
    if (!cutcover::testing::feasible(f, links)) continue;
    ++runs;
    const Instance inst(g, lambda, links);
    const auto result = solve(inst, f);
    for (std::size_t p = 0; p < result.trace.size(); ++p) {
      for (auto order : {WitnessOrder::smallest_first, WitnessOrder::largest_first}) {
        const auto r = audit_phase(inst, f, result, p, order);
        ++phases;
        if (r.num_lstar > 0) ++nonempty_lstar;
        CHECK(r.witness_valid);
        CHECK(r.sparse_crossing);
        CHECK(r.crossing_pairs == r.num_lstar);
        CHECK(r.num_lstar <= 2 * r.num_cores);
        CHECK(r.red_cover);
        CHECK(r.empty_remainder);
        CHECK(r.disjoint_child);
        CHECK(r.red_nodes <= r.num_cores);
        CHECK(r.pass);
      }
    }
  }
  CHECK(phases > 0);
  CHECK(nonempty_lstar > 0);
}

TEST_CASE("tree and psi agree with brute force") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 4 + rng() % 5;
    // Random laminar family: nested prefixes of a random permutation plus disjoint blocks.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<NodeSet> sets;
    std::uint64_t prefix = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      prefix |= std::uint64_t{1} << perm[i];
      if (rng() % 2) sets.emplace_back(n, prefix);
    }
    const SetFamily l_star(n, sets);
    const auto tree = build_tree(l_star);
    for (std::size_t v = 1; v < tree.sets.size(); ++v) {
      const NodeSet parent = tree.sets[static_cast<std::size_t>(tree.parent[v])];
      CHECK(tree.sets[v].proper_subset_of(parent));
      for (const auto& q : tree.sets)
        if (tree.sets[v].proper_subset_of(q)) CHECK(parent.popcount() <= q.popcount());
    }
    std::vector<NodeSet> singles;
    for (std::size_t v = 0; v < n; ++v) singles.push_back(NodeSet::of(n, {v}));
    const SetFamily core_family(n, singles);
    for (const auto& [c, image] : psi_map(core_family, l_star)) CHECK(image == smallest_container(c, l_star));
  }
}
