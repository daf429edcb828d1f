#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cutcover/family.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/primal_dual.hpp"

namespace cutcover {

/// Pairwise nested-or-disjoint family. Construction validates laminarity and
/// throws NotLaminar otherwise.
class LaminarFamily {
 public:
  LaminarFamily() = default;
  LaminarFamily(std::size_t n, std::vector<NodeSet> sets);

  std::size_t n() const { return n_; }
  const std::vector<NodeSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<NodeSet> sets_;
};

bool is_laminar(std::span<const NodeSet> sets);

/// Witness set per link of an inclusion-minimal cover: link id -> S_ℓ.
struct WitnessAssignment {
  std::size_t n = 0;
  std::map<std::size_t, NodeSet> witness;

  std::vector<NodeSet> image() const;
};

enum class WitnessOrder {
  smallest_first,  // default search order
  largest_first,   // favours witnesses that cross cores
};

inline constexpr std::size_t kDefaultWitnessNodeBudget = 1'000'000;

/// Rooted tree over L* ∪ {V}. Node 0 is the root v_V.
struct WitnessTree {
  std::size_t n = 0;
  std::vector<NodeSet> sets;
  std::vector<int> parent;  // -1 for the root
  std::vector<std::vector<std::size_t>> children;
  std::vector<bool> red;

  std::size_t index_of(NodeSet s) const;
};

using PsiMap = std::map<NodeSet, NodeSet>;

struct AuditReport {
  std::size_t phase = 0;
  std::size_t num_cores = 0;
  std::size_t num_witnesses = 0;  // |L̂|
  std::size_t num_lstar = 0;      // |L*|
  std::size_t crossing_pairs = 0;
  std::size_t red_nodes = 0;

  bool witness_valid = true;
  bool sparse_crossing = true;   // (a) each witness set crosses at most one core
  bool density_bound = true;     // (b) |L*| <= 2 |C|
  bool red_cover = true;         // (c)
  bool empty_remainder = true;   // (d)
  bool disjoint_child = true;    // (e)
  bool pass = true;
};

/// Greedy reverse-scan deletion of links from `j` while `c` stays covered.
std::vector<std::size_t> minimal_cover(std::span<const std::size_t> j, const SetFamily& c,
                                       std::span<const Link> links);

/// Covers `c`, and dropping any single listed link uncovers some member.
bool is_inclusion_minimal(const SetFamily& c, std::span<const Link> links, std::span<const std::size_t> ids);

/// Backtracking search for a laminar family of witness sets of `j_hat`, a
/// link set assumed to be an inclusion-minimal cover of cores(f_res). Each
/// link's candidates are the members of `f_res` whose cut meets `j_hat` only
/// in that link. Throws WitnessSearchExhausted when no laminar selection
/// exists and SearchBudgetExceeded after `node_budget` search nodes.
WitnessAssignment find_witness_laminar(std::span<const std::size_t> j_hat, const SetFamily& f_res,
                                       std::span<const Link> links,
                                       WitnessOrder order = WitnessOrder::smallest_first,
                                       std::size_t node_budget = kDefaultWitnessNodeBudget);

/// Parent of v_S is v_Q for the smallest strict superset Q in l_star ∪ {V}.
/// `red` is left all-false. Throws NotLaminar.
WitnessTree build_tree(const SetFamily& l_star);

/// Each core to the smallest member of l_star ∪ {V} containing it.
PsiMap psi_map(const SetFamily& cores, const SetFamily& l_star);

/// Colours v_S red when some core maps to S.
void color_red(WitnessTree& tree, const PsiMap& psi);

/// Checks the crossing-density bound and the tree lemmas for one phase.
/// Failures are reported as verdicts.
AuditReport crossing_density_audit(std::size_t phase, const SetFamily& f_res, const WitnessAssignment& assignment,
                                   std::span<const Link> links);

/// Per-phase audit of a solve: for the phase's residual family, minimalizes
/// the final solution against its cores, finds a witness family in `order`
/// and audits it.
AuditReport audit_phase(const Instance& inst, const SetFamily& f, const SolveResult& result, std::size_t phase,
                        WitnessOrder order = WitnessOrder::smallest_first);

}  // namespace cutcover
