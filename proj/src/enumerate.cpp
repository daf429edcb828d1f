#include "cutcover/enumerate.hpp"

#include <algorithm>
#include <limits>

#include <boost/integer/common_factor_rt.hpp>

#include "cutcover/errors.hpp"

namespace cutcover {
namespace {

constexpr std::uint64_t kChunkRanks = std::uint64_t{1} << 12;
// Scaled totals stay below this so degree - 2*inside never overflows.
const BigInt kScaledCeiling = BigInt(1) << 60;

template <class W>
std::vector<std::uint64_t> walk_small_cuts(const WeightMatrix<W>& m, const W& lambda) {
  const std::size_t width = m.n - 1;
  const std::uint64_t ranks = std::uint64_t{1} << width;
  const std::uint64_t chunks = (ranks + kChunkRanks - 1) / kChunkRanks;
  const std::uint64_t full = NodeSet::full_mask(m.n);

  std::vector<std::vector<std::uint64_t>> found(chunks);
#pragma omp parallel for schedule(dynamic) if (chunks > 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkRanks;
    const std::uint64_t end = std::min(ranks, begin + kChunkRanks);
    GrayCutWalker<W> walker(m, width, begin);
    auto& out = found[static_cast<std::size_t>(c)];
    for (;;) {
      if (walker.bits() != 0 && walker.cut() < lambda) {
        out.push_back(walker.bits());
        out.push_back(walker.bits() ^ full);
      }
      if (walker.rank() + 1 >= end) break;
      walker.advance();
    }
  }
  std::vector<std::uint64_t> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  return all;
}

SetFamily to_family(std::size_t n, const std::vector<std::uint64_t>& bits) {
  std::vector<NodeSet> members;
  members.reserve(bits.size());
  for (auto b : bits) members.emplace_back(n, b);
  return SetFamily(n, std::move(members));
}

void check_limit(const CapGraph& g, std::size_t limit) {
  if (g.n() > limit || g.n() > kMaxVertices) throw GroundSetTooLarge(g.n(), limit);
}

}  // namespace

std::optional<ScaledCapacities> scale_capacities(const CapGraph& g, const Rational& lambda) {
  BigInt den = denominator(lambda);
  for (const auto& e : g.edges()) den = boost::integer::lcm(den, BigInt(denominator(e.cap)));

  const std::size_t n = g.n();
  std::vector<BigInt> big(n * n);
  BigInt total = 0;
  for (const auto& e : g.edges()) {
    const BigInt w = numerator(e.cap) * (den / denominator(e.cap));
    big[e.u * n + e.v] += w;
    big[e.v * n + e.u] += w;
    total += w;
  }
  if (total >= kScaledCeiling) return std::nullopt;

  ScaledCapacities out;
  out.denominator = den;
  out.matrix.n = n;
  out.matrix.w.resize(n * n);
  out.matrix.degree.assign(n, 0);
  for (std::size_t i = 0; i < n * n; ++i) out.matrix.w[i] = big[i].convert_to<std::int64_t>();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.matrix.degree[a] += out.matrix.w[a * n + b];

  const BigInt scaled_lambda = numerator(lambda) * (den / denominator(lambda));
  if (scaled_lambda <= 0)
    out.lambda = 0;
  else if (scaled_lambda > total)
    out.lambda = total.convert_to<std::int64_t>() + 1;
  else
    out.lambda = scaled_lambda.convert_to<std::int64_t>();
  return out;
}

WeightMatrix<Rational> rational_capacities(const CapGraph& g) {
  WeightMatrix<Rational> m;
  m.n = g.n();
  m.w.assign(m.n * m.n, Rational(0));
  m.degree.assign(m.n, Rational(0));
  for (const auto& e : g.edges()) {
    m.w[e.u * m.n + e.v] += e.cap;
    m.w[e.v * m.n + e.u] += e.cap;
    m.degree[e.u] += e.cap;
    m.degree[e.v] += e.cap;
  }
  return m;
}

SetFamily enumerate_small_cuts(const CapGraph& g, const Rational& lambda, std::size_t limit) {
  check_limit(g, limit);
  if (g.n() < 2) return SetFamily(g.n());
  if (auto scaled = scale_capacities(g, lambda))
    return to_family(g.n(), walk_small_cuts(scaled->matrix, scaled->lambda));
  return to_family(g.n(), walk_small_cuts(rational_capacities(g), lambda));
}

SetFamily enumerate_small_cuts_rational(const CapGraph& g, const Rational& lambda, std::size_t limit) {
  check_limit(g, limit);
  if (g.n() < 2) return SetFamily(g.n());
  return to_family(g.n(), walk_small_cuts(rational_capacities(g), lambda));
}

std::vector<Rational> cut_values(const CapGraph& g, std::size_t limit) {
  check_limit(g, limit);
  std::vector<Rational> values;
  if (g.n() < 2) return values;
  const auto m = rational_capacities(g);
  const std::size_t width = g.n() - 1;
  const std::uint64_t ranks = std::uint64_t{1} << width;
  values.reserve(ranks - 1);
  GrayCutWalker<Rational> walker(m, width);
  for (;;) {
    if (walker.bits() != 0) values.push_back(walker.cut());
    if (walker.rank() + 1 >= ranks) break;
    walker.advance();
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace cutcover
