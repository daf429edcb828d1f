#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cutcover/family.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/rational.hpp"

namespace cutcover {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// Capacities summed per vertex pair and scaled to a common denominator.
/// `W` is std::int64_t when every scaled quantity fits, else Rational.
template <class W>
struct WeightMatrix {
  std::size_t n = 0;
  std::vector<W> w;       // n*n, symmetric, zero diagonal
  std::vector<W> degree;  // weighted degree per vertex

  const W& at(std::size_t a, std::size_t b) const { return w[a * n + b]; }

  /// Cut value of `bits` computed from scratch.
  W cut_of(std::uint64_t bits) const {
    W total{};
    for (std::size_t a = 0; a < n; ++a) {
      if (((bits >> a) & 1U) == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (((bits >> b) & 1U) == 0) total += at(a, b);
    }
    return total;
  }
};

/// Capacities as integers over a common denominator, when they fit in 64
/// bits with headroom for every partial cut sum.
struct ScaledCapacities {
  BigInt denominator;
  WeightMatrix<std::int64_t> matrix;
  /// lambda * denominator, clamped into [0, total capacity + 1].
  std::int64_t lambda = 0;
};

std::optional<ScaledCapacities> scale_capacities(const CapGraph& g, const Rational& lambda);
WeightMatrix<Rational> rational_capacities(const CapGraph& g);

/// Walks the subsets of the low `width` vertices in reflected Gray-code order,
/// keeping the cut value current by adding or removing one vertex per step.
template <class W>
class GrayCutWalker {
 public:
  /// Starts at rank `start`, i.e. at subset gray(start).
  GrayCutWalker(const WeightMatrix<W>& m, std::size_t width, std::uint64_t start = 0)
      : m_(&m), width_(width), rank_(start), bits_(start ^ (start >> 1)), cut_(m.cut_of(bits_)) {}

  std::uint64_t rank() const { return rank_; }
  std::uint64_t bits() const { return bits_; }
  const W& cut() const { return cut_; }
  std::size_t width() const { return width_; }

  /// Moves to rank()+1. The caller must stay below 2^width.
  void advance() {
    ++rank_;
    const auto v = static_cast<std::size_t>(std::countr_zero(rank_));
    const std::uint64_t vbit = std::uint64_t{1} << v;
    const std::uint64_t others = bits_ & ~vbit;
    W inside{};
    for (std::uint64_t rest = others; rest != 0; rest &= rest - 1)
      inside += m_->at(v, static_cast<std::size_t>(std::countr_zero(rest)));
    W delta = m_->degree[v] - inside - inside;
    if ((bits_ & vbit) != 0)
      cut_ -= delta;
    else
      cut_ += delta;
    bits_ ^= vbit;
  }

 private:
  const WeightMatrix<W>* m_;
  std::size_t width_;
  std::uint64_t rank_;
  std::uint64_t bits_;
  W cut_;
};

/// All S with ∅ ≠ S ⊊ V and cut capacity strictly below `lambda`.
///
/// Walks the 2^(n-1) subsets that exclude vertex n-1 in parallel Gray-code
/// chunks and adds each hit together with its complement. Throws
/// GroundSetTooLarge when n exceeds `limit`.
SetFamily enumerate_small_cuts(const CapGraph& g, const Rational& lambda,
                               std::size_t limit = kDefaultEnumerationLimit);

/// Same result, forcing the exact-rational walker even when capacities scale
/// into 64-bit integers.
SetFamily enumerate_small_cuts_rational(const CapGraph& g, const Rational& lambda,
                                        std::size_t limit = kDefaultEnumerationLimit);

/// Sorted cut values of the 2^(n-1)-1 non-trivial subsets that exclude vertex
/// n-1 (one per complementary pair).
std::vector<Rational> cut_values(const CapGraph& g, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace cutcover
