#include "cutcover/certify.hpp"

#include <algorithm>

#include "cutcover/errors.hpp"

namespace cutcover {

bool is_laminar(std::span<const NodeSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!laminar_pair(sets[i], sets[j])) return false;
  return true;
}

LaminarFamily::LaminarFamily(std::size_t n, std::vector<NodeSet> sets) : n_(n), sets_(std::move(sets)) {
  if (!is_laminar(sets_)) throw NotLaminar("witness family is not laminar");
}

std::vector<NodeSet> WitnessAssignment::image() const {
  std::vector<NodeSet> out;
  out.reserve(witness.size());
  for (const auto& [id, s] : witness) out.push_back(s);
  return out;
}

std::size_t WitnessTree::index_of(NodeSet s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  return static_cast<std::size_t>(it - sets.begin());
}

std::vector<std::size_t> minimal_cover(std::span<const std::size_t> j, const SetFamily& c,
                                       std::span<const Link> links) {
  return reverse_delete(j, c, links);
}

bool is_inclusion_minimal(const SetFamily& c, std::span<const Link> links, std::span<const std::size_t> ids) {
  if (!covers_family(c, links, ids)) return false;
  for (std::size_t drop = 0; drop < ids.size(); ++drop) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (i != drop) rest.push_back(ids[i]);
    if (covers_family(c, links, rest)) return false;
  }
  return true;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(std::vector<std::size_t> order, std::vector<std::vector<NodeSet>> candidates, std::size_t budget)
      : order_(std::move(order)), candidates_(std::move(candidates)), budget_(budget) {}

  bool run() { return place(0); }
  const std::vector<NodeSet>& chosen() const { return chosen_; }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    for (const auto& s : candidates_[depth]) {
      if (++nodes_ > budget_) throw SearchBudgetExceeded("witness search exceeded its node budget");
      const bool fits =
          std::all_of(chosen_.begin(), chosen_.end(), [&](NodeSet t) { return laminar_pair(s, t); });
      if (!fits) continue;
      chosen_.push_back(s);
      if (place(depth + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<std::size_t> order_;
  std::vector<std::vector<NodeSet>> candidates_;  // indexed by depth
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<NodeSet> chosen_;
};

}  // namespace

WitnessAssignment find_witness_laminar(std::span<const std::size_t> j_hat, const SetFamily& f_res,
                                       std::span<const Link> links, WitnessOrder order, std::size_t node_budget) {
  WitnessAssignment out;
  out.n = f_res.n();
  if (j_hat.empty()) return out;

  std::vector<std::vector<NodeSet>> by_link(j_hat.size());
  for (const auto& s : f_res) {
    std::size_t hit = j_hat.size();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < j_hat.size() && hits < 2; ++i) {
      if (!links[j_hat[i]].covers(s)) continue;
      hit = i;
      ++hits;
    }
    if (hits == 1) by_link[hit].push_back(s);
  }
  for (std::size_t i = 0; i < j_hat.size(); ++i) {
    if (by_link[i].empty())
      throw WitnessSearchExhausted("link " + std::to_string(j_hat[i]) + " has no witness candidate");
    std::stable_sort(by_link[i].begin(), by_link[i].end(), [&](NodeSet a, NodeSet b) {
      return order == WitnessOrder::smallest_first ? a.popcount() < b.popcount() : a.popcount() > b.popcount();
    });
  }

  // Fewest candidates first.
  std::vector<std::size_t> positions(j_hat.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::stable_sort(positions.begin(), positions.end(),
                   [&](std::size_t a, std::size_t b) { return by_link[a].size() < by_link[b].size(); });
  std::vector<std::vector<NodeSet>> candidates;
  for (auto p : positions) candidates.push_back(by_link[p]);

  WitnessSearch search(positions, std::move(candidates), node_budget);
  if (!search.run()) throw WitnessSearchExhausted("no laminar family of witness sets exists");
  for (std::size_t d = 0; d < positions.size(); ++d) out.witness[j_hat[positions[d]]] = search.chosen()[d];
  return out;
}

WitnessTree build_tree(const SetFamily& l_star) {
  if (!is_laminar(l_star.members())) throw NotLaminar("L* is not laminar");
  WitnessTree tree;
  tree.n = l_star.n();
  tree.sets.push_back(NodeSet::full(l_star.n()));
  tree.sets.insert(tree.sets.end(), l_star.begin(), l_star.end());
  const std::size_t k = tree.sets.size();
  tree.parent.assign(k, -1);
  tree.children.assign(k, {});
  tree.red.assign(k, false);
  for (std::size_t i = 1; i < k; ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < k; ++j)
      if (tree.sets[i].proper_subset_of(tree.sets[j]) && tree.sets[j].popcount() < tree.sets[best].popcount())
        best = j;
    tree.parent[i] = static_cast<int>(best);
    tree.children[best].push_back(i);
  }
  return tree;
}

PsiMap psi_map(const SetFamily& cores, const SetFamily& l_star) {
  if (!is_laminar(l_star.members())) throw NotLaminar("L* is not laminar");
  PsiMap psi;
  for (const auto& c : cores) {
    NodeSet best = NodeSet::full(cores.n());
    for (const auto& s : l_star)
      if (c.subset_of(s) && s.popcount() < best.popcount()) best = s;
    psi.emplace(c, best);
  }
  return psi;
}

void color_red(WitnessTree& tree, const PsiMap& psi) {
  for (const auto& [core, image] : psi) {
    const std::size_t at = tree.index_of(image);
    if (at < tree.red.size()) tree.red[at] = true;
  }
}

AuditReport crossing_density_audit(std::size_t phase, const SetFamily& f_res, const WitnessAssignment& assignment,
                                   std::span<const Link> links) {
  AuditReport report;
  report.phase = phase;
  const SetFamily core_family = cores(f_res);
  report.num_cores = core_family.size();
  report.num_witnesses = assignment.witness.size();

  std::vector<std::size_t> j_hat;
  for (const auto& [id, s] : assignment.witness) j_hat.push_back(id);
  const std::vector<NodeSet> image = assignment.image();
  for (const auto& [id, s] : assignment.witness) {
    std::vector<std::size_t> cut;
    for (auto other : j_hat)
      if (links[other].covers(s)) cut.push_back(other);
    if (!f_res.contains(s) || cut != std::vector<std::size_t>{id}) report.witness_valid = false;
  }
  const bool laminar = is_laminar(image);
  report.witness_valid = report.witness_valid && laminar;

  std::vector<NodeSet> l_star;
  std::map<NodeSet, NodeSet> crossing_core;
  for (const auto& s : image) {
    std::size_t count = 0;
    for (const auto& c : core_family) {
      if (!crosses(s, c)) continue;
      if (count++ == 0) crossing_core.emplace(s, c);
    }
    report.crossing_pairs += count;
    if (count > 1) report.sparse_crossing = false;
    if (count > 0) l_star.push_back(s);
  }
  report.num_lstar = l_star.size();
  report.density_bound = report.num_lstar <= 2 * report.num_cores;

  if (!laminar) {
    report.red_cover = report.empty_remainder = report.disjoint_child = false;
  } else {
    const SetFamily l_star_family(f_res.n(), l_star);
    WitnessTree tree = build_tree(l_star_family);
    color_red(tree, psi_map(core_family, l_star_family));
    report.red_nodes = static_cast<std::size_t>(std::count(tree.red.begin(), tree.red.end(), true));

    for (std::size_t v = 1; v < tree.sets.size(); ++v) {
      const auto& kids = tree.children[v];
      const bool red_child = std::any_of(kids.begin(), kids.end(), [&](std::size_t k) { return tree.red[k]; });
      if (!tree.red[v] && !red_child) report.red_cover = false;

      const NodeSet outer = tree.sets[v];
      const NodeSet c0 = crossing_core.at(outer);
      const bool disjoint_kid =
          std::any_of(kids.begin(), kids.end(), [&](std::size_t k) { return tree.sets[k].disjoint_from(c0); });
      if (disjoint_kid && !tree.red[v]) report.disjoint_child = false;

      if (!tree.red[v]) {
        NodeSet rest = outer - c0;
        bool all_crossed = !kids.empty();
        for (auto k : kids) {
          all_crossed = all_crossed && crosses(tree.sets[k], c0);
          rest = rest - tree.sets[k];
        }
        if (!all_crossed || !rest.is_empty()) report.empty_remainder = false;
      }
    }
  }

  report.pass = report.witness_valid && report.sparse_crossing && report.density_bound && report.red_cover &&
                report.empty_remainder && report.disjoint_child && report.crossing_pairs == report.num_lstar &&
                report.red_nodes <= report.num_cores;
  return report;
}

AuditReport audit_phase(const Instance& inst, const SetFamily& f, const SolveResult& result, std::size_t phase,
                        WitnessOrder order) {
  const auto& trace = result.trace.at(phase);
  const std::span<const std::size_t> covered(result.addition_order.data(), trace.picked_before);
  const SetFamily f_res = residual(f, select_links(inst.links(), covered));
  const SetFamily core_family = cores(f_res);
  const auto j_hat = minimal_cover(result.solution, core_family, inst.links());
  const auto assignment = find_witness_laminar(j_hat, f_res, inst.links(), order);
  return crossing_density_audit(phase, f_res, assignment, inst.links());
}

}  // namespace cutcover
