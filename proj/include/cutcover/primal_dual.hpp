#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cutcover/family.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/rational.hpp"

namespace cutcover {

/// Dual variables of the covering LP. Only raised sets appear as keys.
struct DualState {
  std::map<NodeSet, Rational> y;
  Rational total;

  /// Σ y(S) over keys S whose cut contains `link`.
  Rational load(const Link& link) const;
  void raise(NodeSet s, const Rational& amount);
};

struct PhaseTrace {
  std::size_t phase = 0;
  /// Length of the addition order before this phase; those links form the
  /// covered edge set the phase's residual family is taken against.
  std::size_t picked_before = 0;
  SetFamily cores_snapshot;
  Rational epsilon;
  std::vector<std::size_t> tight_link_ids;
  std::size_t residual_size = 0;
};

struct SolveResult {
  std::vector<std::size_t> solution;  // subsequence of addition_order
  Rational cost;
  DualState dual;
  std::vector<PhaseTrace> trace;
  std::vector<std::size_t> addition_order;
};

struct GrowthStep {
  Rational epsilon;
  std::vector<std::size_t> newly_tight;  // ascending link id
};

/// Raises every core uniformly until the first unpicked link goes tight.
///
/// epsilon = min over unpicked links ℓ crossing at least one core of
/// slack(ℓ) / #{cores whose cut contains ℓ}. `state` is raised by epsilon on
/// every core. Throws Infeasible when some core is crossed by no unpicked link.
GrowthStep grow_phase(DualState& state, const SetFamily& cores, std::span<const Link> links,
                      std::span<const std::size_t> already_picked);

/// Scans `addition_order` backwards and drops each link whose removal keeps
/// `f` covered. The result keeps the relative order of `addition_order`.
std::vector<std::size_t> reverse_delete(std::span<const std::size_t> addition_order, const SetFamily& f,
                                        std::span<const Link> links);

/// Σ { y(S) : ℓ ∈ δ(S) } ≤ cost(ℓ) for every link, exactly.
bool dual_feasible(const Instance& inst, const DualState& y);

/// Primal-dual cover of `f` by the instance's links: a zero-cost sweep, then
/// uniform growth phases on the cores of the residual family, then reverse
/// delete. Deterministic. Throws Infeasible(S) for the first member of `f`
/// that no link covers.
SolveResult solve(const Instance& inst, const SetFamily& f);

/// True when every member of `f` is covered by some listed link.
bool covers_family(const SetFamily& f, std::span<const Link> links, std::span<const std::size_t> ids);

}  // namespace cutcover
