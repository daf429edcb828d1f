#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cutcover/graph.hpp"
#include "cutcover/node_set.hpp"

namespace cutcover {

/// Explicit finite family of proper non-empty subsets of [0, n).
///
/// Members are kept sorted by mask and deduplicated, so two families with the
/// same members compare equal and iterate identically. Both a set and its
/// complement are stored when both belong to the family.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t n) : n_(n) {}
  /// Sorts and deduplicates. Throws std::invalid_argument for ∅, V or a
  /// member over a different ground set.
  SetFamily(std::size_t n, std::vector<NodeSet> members);

  std::size_t n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<NodeSet>& members() const { return members_; }
  const NodeSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(NodeSet s) const;
  /// Position of `s` in members(), or size() when absent.
  std::size_t index_of(NodeSet s) const;

  bool subfamily_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<NodeSet> members_;
};

/// Members not covered by any of `cover_links`.
SetFamily residual(const SetFamily& f, std::span<const Link> cover_links);

/// Inclusion-minimal members.
SetFamily cores(const SetFamily& f);

}  // namespace cutcover
