#include "cutcover/primal_dual.hpp"

#include <algorithm>
#include <optional>

#include "cutcover/errors.hpp"

namespace cutcover {

Rational DualState::load(const Link& link) const {
  Rational sum = 0;
  for (const auto& [s, value] : y)
    if (link.covers(s)) sum += value;
  return sum;
}

void DualState::raise(NodeSet s, const Rational& amount) {
  y[s] += amount;
  total += amount;
}

GrowthStep grow_phase(DualState& state, const SetFamily& cores, std::span<const Link> links,
                      std::span<const std::size_t> already_picked) {
  std::vector<bool> picked(links.size(), false);
  for (auto id : already_picked) picked[id] = true;

  std::vector<bool> core_reachable(cores.size(), false);
  std::optional<Rational> best;
  std::vector<std::pair<std::size_t, Rational>> ratios;
  for (const auto& link : links) {
    if (picked[link.id]) continue;
    std::size_t hits = 0;
    for (std::size_t c = 0; c < cores.size(); ++c) {
      if (!link.covers(cores[c])) continue;
      ++hits;
      core_reachable[c] = true;
    }
    if (hits == 0) continue;
    Rational r = (link.cost - state.load(link)) / hits;
    if (!best || r < *best) best = r;
    ratios.emplace_back(link.id, std::move(r));
  }
  for (std::size_t c = 0; c < cores.size(); ++c)
    if (!core_reachable[c]) throw Infeasible(cores[c].bits());
  if (!best) return {};

  GrowthStep step;
  step.epsilon = *best;
  for (const auto& [id, r] : ratios)
    if (r == step.epsilon) step.newly_tight.push_back(id);
  std::sort(step.newly_tight.begin(), step.newly_tight.end());
  for (const auto& c : cores) state.raise(c, step.epsilon);
  return step;
}

std::vector<std::size_t> reverse_delete(std::span<const std::size_t> addition_order, const SetFamily& f,
                                        std::span<const Link> links) {
  std::vector<std::size_t> coverage(f.size(), 0);
  for (auto id : addition_order)
    for (std::size_t i = 0; i < f.size(); ++i)
      if (links[id].covers(f[i])) ++coverage[i];

  std::vector<bool> keep(addition_order.size(), true);
  for (std::size_t pos = addition_order.size(); pos-- > 0;) {
    const Link& link = links[addition_order[pos]];
    bool needed = false;
    for (std::size_t i = 0; i < f.size() && !needed; ++i)
      needed = link.covers(f[i]) && coverage[i] == 1;
    if (needed) continue;
    keep[pos] = false;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (link.covers(f[i])) --coverage[i];
  }

  std::vector<std::size_t> kept;
  for (std::size_t pos = 0; pos < addition_order.size(); ++pos)
    if (keep[pos]) kept.push_back(addition_order[pos]);
  return kept;
}

bool dual_feasible(const Instance& inst, const DualState& y) {
  for (const auto& [s, value] : y.y)
    if (value < 0) return false;
  return std::all_of(inst.links().begin(), inst.links().end(),
                     [&](const Link& l) { return y.load(l) <= l.cost; });
}

bool covers_family(const SetFamily& f, std::span<const Link> links, std::span<const std::size_t> ids) {
  return std::all_of(f.begin(), f.end(), [&](NodeSet s) {
    return std::any_of(ids.begin(), ids.end(), [&](std::size_t id) { return links[id].covers(s); });
  });
}

SolveResult solve(const Instance& inst, const SetFamily& f) {
  const auto& links = inst.links();
  for (const auto& s : f)
    if (!is_covered(s, links)) throw Infeasible(s.bits());

  SolveResult result;
  auto admit = [&](const std::vector<std::size_t>& ids) {
    result.addition_order.insert(result.addition_order.end(), ids.begin(), ids.end());
  };

  std::vector<std::size_t> free_links;
  for (const auto& l : links)
    if (l.cost == 0 && std::any_of(f.begin(), f.end(), [&](NodeSet s) { return l.covers(s); }))
      free_links.push_back(l.id);
  if (!free_links.empty()) {
    result.trace.push_back(PhaseTrace{0, 0, cores(f), Rational(0), free_links, f.size()});
    admit(free_links);
  }

  for (;;) {
    const SetFamily res = residual(f, select_links(links, result.addition_order));
    if (res.empty()) break;
    SetFamily phase_cores = cores(res);
    GrowthStep step = grow_phase(result.dual, phase_cores, links, result.addition_order);
    result.trace.push_back(PhaseTrace{result.trace.size(), result.addition_order.size(), std::move(phase_cores),
                                      step.epsilon, step.newly_tight, res.size()});
    admit(step.newly_tight);
  }

  result.solution = reverse_delete(result.addition_order, f, links);
  result.cost = total_cost(links, result.solution);
  return result;
}

}  // namespace cutcover
