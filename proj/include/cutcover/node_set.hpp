#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutcover {

inline constexpr std::size_t kMaxVertices = 64;

/// Subset of the ground set [0, n), stored as a 64-bit mask.
///
/// Bits at positions >= n are always zero. Ordering compares the raw mask,
/// which is the canonical order used by every family container.
class NodeSet {
 public:
  constexpr NodeSet() = default;

  constexpr NodeSet(std::size_t n, std::uint64_t bits) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxVertices) throw std::invalid_argument("NodeSet: ground set too large");
    if ((bits & ~full_mask(n)) != 0) throw std::invalid_argument("NodeSet: bit outside ground set");
  }

  static constexpr NodeSet empty(std::size_t n) { return NodeSet(n, 0); }
  static constexpr NodeSet full(std::size_t n) { return NodeSet(n, full_mask(n)); }
  static NodeSet of(std::size_t n, std::initializer_list<std::size_t> members) {
    std::uint64_t bits = 0;
    for (auto v : members) {
      if (v >= n) throw std::invalid_argument("NodeSet: member outside ground set");
      bits |= std::uint64_t{1} << v;
    }
    return NodeSet(n, bits);
  }

  static constexpr std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t ground_size() const { return n_; }

  constexpr bool contains(std::size_t v) const { return v < n_ && ((bits_ >> v) & 1U) != 0; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == full_mask(n_); }
  constexpr std::size_t popcount() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr NodeSet operator|(NodeSet o) const { return raw(n_, bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return raw(n_, bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return raw(n_, bits_ & ~o.bits_); }
  constexpr NodeSet complement() const { return raw(n_, ~bits_ & full_mask(n_)); }

  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(NodeSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool disjoint_from(NodeSet o) const { return (bits_ & o.bits_) == 0; }

  std::vector<std::size_t> members() const;
  /// "{0,2,5}"
  std::string to_string() const;

  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;
  friend constexpr std::strong_ordering operator<=>(NodeSet a, NodeSet b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr NodeSet raw(std::size_t n, std::uint64_t bits) {
    NodeSet s;
    s.bits_ = bits;
    s.n_ = static_cast<std::uint8_t>(n);
    return s;
  }

  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
};

/// A and B cross when A∩B, V−(A∪B), A−B and B−A are all non-empty.
constexpr bool crosses(NodeSet a, NodeSet b) {
  const std::uint64_t full = NodeSet::full_mask(a.ground_size());
  const std::uint64_t x = a.bits(), y = b.bits();
  return (x & y) != 0 && ((x | y) & full) != full && (x & ~y) != 0 && (y & ~x) != 0;
}

/// Nested or disjoint.
constexpr bool laminar_pair(NodeSet a, NodeSet b) {
  return a.disjoint_from(b) || a.subset_of(b) || b.subset_of(a);
}

}  // namespace cutcover
