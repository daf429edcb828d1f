#include "cutcover/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcover {

SetFamily::SetFamily(std::size_t n, std::vector<NodeSet> members) : n_(n), members_(std::move(members)) {
  for (const auto& s : members_) {
    if (s.ground_size() != n) throw std::invalid_argument("family member over a different ground set");
    if (s.is_empty() || s.is_full()) throw std::invalid_argument("family may not contain the empty set or V");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(NodeSet s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::size_t SetFamily::index_of(NodeSet s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
  return n_ == other.n_ && std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SetFamily residual(const SetFamily& f, std::span<const Link> cover_links) {
  std::vector<NodeSet> kept;
  for (const auto& s : f)
    if (!is_covered(s, cover_links)) kept.push_back(s);
  return SetFamily(f.n(), std::move(kept));
}

SetFamily cores(const SetFamily& f) {
  // Visit by increasing size: a member is minimal iff no minimal set found so
  // far lies inside it, since every proper subset in f contains a minimal one.
  std::vector<NodeSet> order(f.begin(), f.end());
  std::stable_sort(order.begin(), order.end(),
                   [](NodeSet a, NodeSet b) { return a.popcount() < b.popcount(); });
  std::vector<NodeSet> minimal;
  for (const auto& s : order) {
    const bool has_smaller = std::any_of(minimal.begin(), minimal.end(),
                                         [&](NodeSet c) { return c.proper_subset_of(s); });
    if (!has_smaller) minimal.push_back(s);
  }
  return SetFamily(f.n(), std::move(minimal));
}

}  // namespace cutcover
