#include "cutcover/properties.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <random>
#include <unordered_map>

#include "cutcover/generate.hpp"

namespace cutcover {
namespace {

using Witness = std::vector<NodeSet>;

// Smallest index in [0, count) whose probe reports a violation. Indices above
// the best hit so far are skipped; the least failing index is always probed,
// so the result does not depend on scheduling.
template <class Probe>
std::optional<Witness> first_failure(std::size_t count, Probe&& probe) {
  std::size_t best = count;
  Witness witness;
#pragma omp parallel for schedule(dynamic, 8) if (count > 64)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    std::size_t current;
#pragma omp atomic read
    current = best;
    if (i >= current) continue;
    if (auto w = probe(i)) {
#pragma omp critical(cutcover_first_failure)
      {
        if (i < best) {
          witness = std::move(*w);
#pragma omp atomic write
          best = i;
        }
      }
    }
  }
  if (best == count) return std::nullopt;
  return witness;
}

PropertyReport make_report(Property p, std::optional<Witness> w) {
  PropertyReport r;
  r.property = p;
  r.holds = !w.has_value();
  if (w) r.counterexample = std::move(*w);
  return r;
}

int corners_present(const SetFamily& f, NodeSet a, NodeSet b) {
  return int(f.contains(a & b)) + int(f.contains(a | b)) + int(f.contains(a - b)) + int(f.contains(b - a));
}

bool submodular_clauses(const SetFamily& f, NodeSet a, NodeSet b) {
  return (f.contains(a & b) || f.contains(a | b)) && (f.contains(a - b) || f.contains(b - a));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// One (C, S0) configuration of the remainder property and the candidate
// inner sets: members of f strictly inside S0 that cross C.
struct GammaSlot {
  NodeSet core;
  NodeSet outer;
  std::vector<NodeSet> inner;
  std::uint64_t tuples = 0;  // non-empty admissible subfamilies, saturating
};

// Counts pairwise-disjoint subfamilies of `inner` (empty one included) whose
// union lies in a universe R, memoized on R. Branches on the lowest element
// x of R: either no chosen set holds x, or exactly one chosen set c ∋ x does.
template <class Count>
class DisjointCounter {
 public:
  explicit DisjointCounter(const std::vector<NodeSet>& inner) : inner_(inner) {}

  Count count(std::uint64_t universe) {
    if (universe == 0) return Count{1};
    if (auto it = memo_.find(universe); it != memo_.end()) return it->second;
    const std::uint64_t x = universe & (~universe + 1);
    Count total = count(universe & ~x);
    for (const auto& c : inner_) {
      if ((c.bits() & x) == 0 || (c.bits() & ~universe) != 0) continue;
      total = add(total, count(universe & ~c.bits()));
    }
    memo_.emplace(universe, total);
    return total;
  }

  const std::vector<NodeSet>& inner() const { return inner_; }

 private:
  static Count add(Count a, Count b) {
    if constexpr (std::is_same_v<Count, std::uint64_t>)
      return sat_add(a, b);
    else
      return a + b;
  }

  const std::vector<NodeSet>& inner_;
  std::unordered_map<std::uint64_t, Count> memo_;
};

std::uint64_t union_bits(const std::vector<NodeSet>& sets) {
  std::uint64_t u = 0;
  for (const auto& s : sets) u |= s.bits();
  return u;
}

bool remainder_ok(const SetFamily& f, NodeSet core, NodeSet outer, std::uint64_t inner_union) {
  const NodeSet rest = outer - core - NodeSet(f.n(), inner_union);
  return rest.is_empty() || f.contains(rest);
}

// Per-slot outcome; folded in slot order after the parallel loop.
struct SlotResult {
  std::uint64_t tested = 0;
  std::size_t max_k = 0;
  std::optional<Witness> failure;
};

Witness tuple_witness(const GammaSlot& slot, const std::vector<std::size_t>& chosen) {
  Witness w{slot.core, slot.outer};
  for (auto i : chosen) w.push_back(slot.inner[i]);
  return w;
}

// Depth-first over admissible subfamilies in increasing index order.
void enumerate_slot(const SetFamily& f, const GammaSlot& slot, std::size_t k_limit, std::vector<std::size_t>& chosen,
                    std::uint64_t used, std::size_t from, SlotResult& out) {
  for (std::size_t i = from; i < slot.inner.size() && !out.failure; ++i) {
    const std::uint64_t b = slot.inner[i].bits();
    if ((b & used) != 0) continue;
    chosen.push_back(i);
    ++out.tested;
    out.max_k = std::max(out.max_k, chosen.size());
    if (!remainder_ok(f, slot.core, slot.outer, used | b))
      out.failure = tuple_witness(slot, chosen);
    else if (chosen.size() < k_limit)
      enumerate_slot(f, slot, k_limit, chosen, used | b, i + 1, out);
    chosen.pop_back();
  }
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform pairwise-disjoint subfamily of slot.inner, possibly empty.
std::vector<std::size_t> sample_subfamily(const GammaSlot& slot, DisjointCounter<double>& counter, std::mt19937_64& rng) {
  std::vector<std::size_t> chosen;
  std::uint64_t universe = union_bits(slot.inner);
  while (universe != 0) {
    const std::uint64_t x = universe & (~universe + 1);
    double pick = unit_draw(rng) * counter.count(universe);
    const double skip = counter.count(universe & ~x);
    if (pick < skip) {
      universe &= ~x;
      continue;
    }
    pick -= skip;
    std::optional<std::size_t> taken;
    for (std::size_t i = 0; i < slot.inner.size(); ++i) {
      const std::uint64_t b = slot.inner[i].bits();
      if ((b & x) == 0 || (b & ~universe) != 0) continue;
      taken = i;  // floating-point slack falls through to the last option
      const double w = counter.count(universe & ~b);
      if (pick < w) break;
      pick -= w;
    }
    if (!taken) {
      universe &= ~x;
      continue;
    }
    chosen.push_back(*taken);
    universe &= ~slot.inner[*taken].bits();
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

PropertyReport check_remainder_property(const SetFamily& f, Property property, std::size_t k_limit,
                                        std::uint64_t sample_budget, std::uint64_t seed) {
  const SetFamily core_family = cores(f);
  std::vector<GammaSlot> slots;
  for (const auto& c : core_family) {
    for (const auto& s0 : f) {
      if (!crosses(s0, c)) continue;
      GammaSlot slot{c, s0, {}, 0};
      for (const auto& s : f)
        if (s.proper_subset_of(s0) && crosses(s, c)) slot.inner.push_back(s);
      if (!slot.inner.empty()) slots.push_back(std::move(slot));
    }
  }

#pragma omp parallel for schedule(dynamic) if (slots.size() > 8)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(slots.size()); ++k) {
    auto& slot = slots[static_cast<std::size_t>(k)];
    if (k_limit == 1) {
      slot.tuples = slot.inner.size();
    } else {
      DisjointCounter<std::uint64_t> counter(slot.inner);
      slot.tuples = counter.count(union_bits(slot.inner)) - 1;
    }
  }

  PropertyReport report;
  report.property = property;
  for (const auto& slot : slots) report.tuples_total = sat_add(report.tuples_total, slot.tuples);
  report.exhaustive = report.tuples_total <= sample_budget;

  std::vector<std::uint64_t> quota(slots.size(), 0);
  if (!report.exhaustive) {
    std::vector<double> cumulative;
    cumulative.reserve(slots.size());
    double acc = 0;
    for (const auto& slot : slots) {
      if (k_limit == 1) {
        acc += static_cast<double>(slot.tuples);
      } else {
        DisjointCounter<double> counter(slot.inner);
        acc += counter.count(union_bits(slot.inner)) - 1.0;
      }
      cumulative.push_back(acc);
    }
    std::mt19937_64 rng(mix_seed(seed));
    for (std::uint64_t draw = 0; draw < sample_budget; ++draw) {
      const double target = unit_draw(rng) * acc;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
      if (it == cumulative.end()) --it;
      ++quota[static_cast<std::size_t>(it - cumulative.begin())];
    }
  }

  std::vector<SlotResult> results(slots.size());
#pragma omp parallel for schedule(dynamic) if (slots.size() > 8)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(slots.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto& slot = slots[idx];
    auto& out = results[idx];
    if (report.exhaustive) {
      std::vector<std::size_t> chosen;
      enumerate_slot(f, slot, k_limit, chosen, 0, 0, out);
      continue;
    }
    std::mt19937_64 rng(mix_seed(seed ^ mix_seed(idx + 1)));
    DisjointCounter<double> counter(slot.inner);
    for (std::uint64_t q = 0; q < quota[idx] && !out.failure; ++q) {
      std::vector<std::size_t> chosen;
      if (k_limit == 1) {
        chosen.push_back(static_cast<std::size_t>(rng() % slot.inner.size()));
      } else {
        do chosen = sample_subfamily(slot, counter, rng);
        while (chosen.empty());
      }
      std::uint64_t used = 0;
      for (auto i : chosen) used |= slot.inner[i].bits();
      ++out.tested;
      out.max_k = std::max(out.max_k, chosen.size());
      if (!remainder_ok(f, slot.core, slot.outer, used)) out.failure = tuple_witness(slot, chosen);
    }
  }

  for (auto& r : results) {
    report.tuples_tested += r.tested;
    report.max_k = std::max(report.max_k, r.max_k);
    if (r.failure && report.holds) {
      report.holds = false;
      report.counterexample = std::move(*r.failure);
    }
  }
  return report;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::symmetry: return "symmetry";
    case Property::pliable: return "pliable";
    case Property::structural_submodularity: return "structural_submodularity";
    case Property::sparse_crossing: return "sparse_crossing";
    case Property::disjoint_cores: return "disjoint_cores";
    case Property::gamma: return "gamma";
    case Property::gamma_star: return "gamma_star";
  }
  return "unknown";
}

PropertyReport check_symmetry(const SetFamily& f) {
  return make_report(Property::symmetry, first_failure(f.size(), [&](std::size_t i) -> std::optional<Witness> {
                       if (f.contains(f[i].complement())) return std::nullopt;
                       return Witness{f[i]};
                     }));
}

PropertyReport check_pliable(const SetFamily& f) {
  return make_report(Property::pliable, first_failure(f.size(), [&](std::size_t i) -> std::optional<Witness> {
                       for (std::size_t j = i + 1; j < f.size(); ++j)
                         if (corners_present(f, f[i], f[j]) < 2) return Witness{f[i], f[j]};
                       return std::nullopt;
                     }));
}

PropertyReport check_structural_submodularity(const SetFamily& f) {
  return make_report(Property::structural_submodularity,
                     first_failure(f.size(), [&](std::size_t i) -> std::optional<Witness> {
                       for (std::size_t j = i + 1; j < f.size(); ++j)
                         if (crosses(f[i], f[j]) && !submodular_clauses(f, f[i], f[j])) return Witness{f[i], f[j]};
                       return std::nullopt;
                     }));
}

PropertyReport check_sparse_crossing(const SetFamily& f) {
  const SetFamily c = cores(f);
  return make_report(Property::sparse_crossing, first_failure(f.size(), [&](std::size_t i) -> std::optional<Witness> {
                       Witness w{f[i]};
                       for (const auto& core : c) {
                         if (!crosses(f[i], core)) continue;
                         w.push_back(core);
                         if (w.size() == 3) return w;
                       }
                       return std::nullopt;
                     }));
}

PropertyReport check_disjoint_cores(const SetFamily& f) {
  const SetFamily c = cores(f);
  return make_report(Property::disjoint_cores, first_failure(c.size(), [&](std::size_t i) -> std::optional<Witness> {
                       for (std::size_t j = i + 1; j < c.size(); ++j)
                         if (!c[i].disjoint_from(c[j])) return Witness{c[i], c[j]};
                       return std::nullopt;
                     }));
}

PropertyReport check_gamma(const SetFamily& f) {
  return check_remainder_property(f, Property::gamma, 1, std::numeric_limits<std::uint64_t>::max(), 0);
}

PropertyReport check_gamma_star(const SetFamily& f, std::uint64_t sample_budget, std::uint64_t seed) {
  return check_remainder_property(f, Property::gamma_star, std::numeric_limits<std::size_t>::max(), sample_budget,
                                  seed);
}

bool replay_counterexample(const SetFamily& f, const PropertyReport& report) {
  if (report.holds) return false;
  const auto& w = report.counterexample;
  auto in_f = [&](std::size_t i) { return f.contains(w[i]); };
  switch (report.property) {
    case Property::symmetry:
      return w.size() == 1 && in_f(0) && !f.contains(w[0].complement());
    case Property::pliable:
      return w.size() == 2 && in_f(0) && in_f(1) && corners_present(f, w[0], w[1]) < 2;
    case Property::structural_submodularity:
      return w.size() == 2 && in_f(0) && in_f(1) && crosses(w[0], w[1]) && !submodular_clauses(f, w[0], w[1]);
    case Property::sparse_crossing: {
      const SetFamily c = cores(f);
      return w.size() == 3 && in_f(0) && c.contains(w[1]) && c.contains(w[2]) && w[1] != w[2] &&
             crosses(w[0], w[1]) && crosses(w[0], w[2]);
    }
    case Property::disjoint_cores: {
      const SetFamily c = cores(f);
      return w.size() == 2 && c.contains(w[0]) && c.contains(w[1]) && w[0] != w[1] && !w[0].disjoint_from(w[1]);
    }
    case Property::gamma:
    case Property::gamma_star: {
      if (w.size() < 3 || (report.property == Property::gamma && w.size() != 3)) return false;
      const NodeSet core = w[0], outer = w[1];
      if (!cores(f).contains(core) || !f.contains(outer) || !crosses(outer, core)) return false;
      std::uint64_t used = 0;
      for (std::size_t i = 2; i < w.size(); ++i) {
        if (!f.contains(w[i]) || !w[i].proper_subset_of(outer) || !crosses(w[i], core)) return false;
        if ((w[i].bits() & used) != 0) return false;
        used |= w[i].bits();
      }
      return !remainder_ok(f, core, outer, used);
    }
  }
  return false;
}

}  // namespace cutcover
