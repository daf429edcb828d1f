#include "cutcover/reference.hpp"

#include <algorithm>

namespace cutcover::reference {
namespace {

bool member(const SetFamily& f, NodeSet s) {
  return std::find(f.begin(), f.end(), s) != f.end();
}

PropertyReport verdict(Property p, std::vector<NodeSet> witness) {
  PropertyReport r;
  r.property = p;
  r.holds = witness.empty();
  r.counterexample = std::move(witness);
  return r;
}

}  // namespace

SetFamily enumerate_small_cuts(const CapGraph& g, const Rational& lambda) {
  std::vector<NodeSet> out;
  const std::size_t n = g.n();
  if (n < 2) return SetFamily(n);
  const std::uint64_t full = NodeSet::full_mask(n);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const NodeSet s(n, bits);
    if (cut_capacity(g, s) < lambda) out.push_back(s);
  }
  return SetFamily(n, std::move(out));
}

SetFamily cores(const SetFamily& f) {
  std::vector<NodeSet> out;
  for (const auto& s : f) {
    bool minimal = true;
    for (const auto& t : f)
      if (t.proper_subset_of(s)) minimal = false;
    if (minimal) out.push_back(s);
  }
  return SetFamily(f.n(), std::move(out));
}

PropertyReport check_symmetry(const SetFamily& f) {
  for (const auto& s : f)
    if (!member(f, s.complement())) return verdict(Property::symmetry, {s});
  return verdict(Property::symmetry, {});
}

PropertyReport check_pliable(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const NodeSet a = f[i], b = f[j];
      int present = 0;
      for (NodeSet corner : {a & b, a | b, a - b, b - a})
        if (!corner.is_empty() && !corner.is_full() && member(f, corner)) ++present;
      if (present < 2) return verdict(Property::pliable, {a, b});
    }
  }
  return verdict(Property::pliable, {});
}

PropertyReport check_structural_submodularity(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const NodeSet a = f[i], b = f[j];
      const bool cross = !(a & b).is_empty() && !(a | b).is_full() && !(a - b).is_empty() && !(b - a).is_empty();
      if (!cross) continue;
      const bool first = member(f, a & b) || member(f, a | b);
      const bool second = member(f, a - b) || member(f, b - a);
      if (!first || !second) return verdict(Property::structural_submodularity, {a, b});
    }
  }
  return verdict(Property::structural_submodularity, {});
}

PropertyReport check_sparse_crossing(const SetFamily& f) {
  const SetFamily c = reference::cores(f);
  for (const auto& s : f) {
    std::vector<NodeSet> hit;
    for (const auto& core : c)
      if (crosses(s, core)) hit.push_back(core);
    if (hit.size() >= 2) return verdict(Property::sparse_crossing, {s, hit[0], hit[1]});
  }
  return verdict(Property::sparse_crossing, {});
}

PropertyReport check_disjoint_cores(const SetFamily& f) {
  const SetFamily c = reference::cores(f);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!(c[i] & c[j]).is_empty()) return verdict(Property::disjoint_cores, {c[i], c[j]});
  return verdict(Property::disjoint_cores, {});
}

PropertyReport check_gamma_star(const SetFamily& f) {
  PropertyReport report;
  report.property = Property::gamma_star;
  const SetFamily c = reference::cores(f);
  for (const auto& core : c) {
    for (const auto& outer : f) {
      if (!crosses(outer, core)) continue;
      std::vector<NodeSet> inner;
      for (const auto& s : f)
        if (s.proper_subset_of(outer) && crosses(s, core)) inner.push_back(s);
      // Every non-empty subfamily by bitmask; keep the pairwise-disjoint ones.
      const std::uint64_t subsets = std::uint64_t{1} << inner.size();
      for (std::uint64_t pick = 1; pick < subsets; ++pick) {
        NodeSet joined = NodeSet::empty(f.n());
        bool disjoint = true;
        std::size_t k = 0;
        for (std::size_t i = 0; i < inner.size() && disjoint; ++i) {
          if (((pick >> i) & 1U) == 0) continue;
          disjoint = (joined & inner[i]).is_empty();
          joined = joined | inner[i];
          ++k;
        }
        if (!disjoint) continue;
        ++report.tuples_total;
        ++report.tuples_tested;
        report.max_k = std::max(report.max_k, k);
        const NodeSet rest = outer - joined - core;
        if (!rest.is_empty() && !member(f, rest) && report.holds) {
          report.holds = false;
          report.counterexample = {core, outer};
          for (std::size_t i = 0; i < inner.size(); ++i)
            if ((pick >> i) & 1U) report.counterexample.push_back(inner[i]);
        }
      }
    }
  }
  return report;
}

}  // namespace cutcover::reference
