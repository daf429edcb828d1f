#include "cutcover/exact.hpp"

#include <algorithm>
#include <bit>

#include "cutcover/errors.hpp"

namespace cutcover {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SetFamily& f) : links_(inst.links()) {
    // Members by increasing size so minimal sets surface first.
    std::vector<NodeSet> by_size(f.begin(), f.end());
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](NodeSet a, NodeSet b) { return a.popcount() < b.popcount(); });
    for (const auto& s : by_size) {
      std::uint32_t mask = 0;
      for (const auto& l : links_)
        if (l.covers(s)) mask |= std::uint32_t{1} << l.id;
      if (mask == 0) throw Infeasible(s.bits());
      sets_.push_back(s);
      cover_.push_back(mask);
    }
    by_cost_.resize(links_.size());
    for (std::size_t i = 0; i < links_.size(); ++i) by_cost_[i] = i;
    std::stable_sort(by_cost_.begin(), by_cost_.end(),
                     [&](std::size_t a, std::size_t b) { return links_[a].cost < links_[b].cost; });
  }

  void seed(const Incumbent& inc) {
    std::uint32_t mask = 0;
    for (auto id : inc.links) mask |= std::uint32_t{1} << id;
    best_cost_ = inc.cost;
    best_mask_ = mask;
    have_best_ = true;
  }

  void run() { visit(0, 0, Rational(0)); }

  ExactResult result() const {
    if (!have_best_) throw Infeasible(0);
    ExactResult r;
    r.opt_cost = best_cost_;
    for (std::size_t i = 0; i < links_.size(); ++i)
      if ((best_mask_ >> i) & 1U) r.opt_links.push_back(i);
    r.nodes_explored = nodes_;
    return r;
  }

 private:
  void visit(std::uint32_t chosen, std::uint32_t excluded, const Rational& cost) {
    ++nodes_;
    if (have_best_ && cost >= best_cost_) return;

    // Cores of the uncovered members; pick the one with fewest usable links.
    std::vector<NodeSet> minimal;
    std::uint32_t branch_links = 0;
    int fewest = -1;
    bool uncovered = false;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if ((cover_[i] & chosen) != 0) continue;
      uncovered = true;
      const NodeSet s = sets_[i];
      if (std::any_of(minimal.begin(), minimal.end(), [&](NodeSet c) { return c.proper_subset_of(s); })) continue;
      minimal.push_back(s);
      const std::uint32_t usable = cover_[i] & ~excluded;
      const int count = std::popcount(usable);
      if (count == 0) return;
      if (fewest < 0 || count < fewest) {
        fewest = count;
        branch_links = usable;
      }
    }
    if (!uncovered) {
      best_cost_ = cost;
      best_mask_ = chosen;
      have_best_ = true;
      return;
    }

    // The i-th branch takes link i and rules out the links tried before it.
    std::uint32_t tried = 0;
    for (auto id : by_cost_) {
      const std::uint32_t bit = std::uint32_t{1} << id;
      if ((branch_links & bit) == 0) continue;
      visit(chosen | bit, excluded | tried, cost + links_[id].cost);
      tried |= bit;
    }
  }

  const std::vector<Link>& links_;
  std::vector<NodeSet> sets_;
  std::vector<std::uint32_t> cover_;
  std::vector<std::size_t> by_cost_;
  Rational best_cost_;
  std::uint32_t best_mask_ = 0;
  bool have_best_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_optimum(const Instance& inst, const SetFamily& f, std::optional<Incumbent> incumbent,
                          std::size_t link_limit) {
  const std::size_t limit = std::min<std::size_t>(link_limit, 32);
  if (inst.links().size() > limit) throw TooManyLinks(inst.links().size(), limit);
  BranchAndBound search(inst, f);
  if (incumbent) search.seed(*incumbent);
  search.run();
  return search.result();
}

Rational ratio(const SolveResult& alg, const ExactResult& opt) {
  if (opt.opt_cost == 0) {
    if (alg.cost != 0) throw ZeroOptimumViolation("optimum is free but the algorithm paid " + format_rational(alg.cost));
    return Rational(1);
  }
  return alg.cost / opt.opt_cost;
}

}  // namespace cutcover
