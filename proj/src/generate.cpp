#include "cutcover/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cutcover/errors.hpp"

namespace cutcover {
namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

// Portable bounded draw; std distributions differ between standard libraries.
std::int64_t draw(std::mt19937_64& rng, IntRange r) {
  const std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return r.lo + static_cast<std::int64_t>(x % span);
}

bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

CapGraph draw_graph(const RunConfig& cfg, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(draw(rng, cfg.n_range));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng, cfg.edge_density)) edges.push_back(Edge{a, b, Rational(draw(rng, cfg.cap_range))});
  return CapGraph(n, std::move(edges));
}

std::vector<Link> draw_links(const RunConfig& cfg, std::size_t n, std::mt19937_64& rng) {
  std::vector<Link> links;
  if (n < 2) return links;
  const auto count = static_cast<std::size_t>(draw(rng, cfg.link_range));
  const IntRange vertex{0, static_cast<std::int64_t>(n) - 1};
  while (links.size() < count) {
    const auto a = static_cast<std::size_t>(draw(rng, vertex));
    const auto b = static_cast<std::size_t>(draw(rng, vertex));
    if (a == b) continue;
    links.push_back(Link{a, b, Rational(draw(rng, cfg.cost_range)), links.size()});
  }
  return links;
}

Rational pick_lambda(const RunConfig& cfg, const CapGraph& g) {
  if (cfg.lambda_policy.kind == LambdaPolicy::Kind::fixed) return cfg.lambda_policy.value;
  return quantile_lambda(g, cfg.lambda_policy.quantile, cfg.enumeration_limit);
}

// Graphs are redrawn every this many link draws.
constexpr std::size_t kLinkDrawsPerGraph = 20;

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

IntRange parse_range(std::string_view text) {
  const auto colon = text.find(':');
  IntRange r;
  if (colon == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, colon));
    r.hi = parse_int(text.substr(colon + 1));
  }
  if (!r.valid()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

LambdaPolicy parse_lambda_policy(std::string_view text) {
  LambdaPolicy p;
  if (text.starts_with("fixed:")) {
    p.kind = LambdaPolicy::Kind::fixed;
    p.value = parse_rational(text.substr(6));
    return p;
  }
  if (text.starts_with("quantile:")) {
    p.kind = LambdaPolicy::Kind::quantile;
    const std::string body(text.substr(9));
    std::size_t used = 0;
    try {
      p.quantile = std::stod(body, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != body.size() || !(p.quantile >= 0.0 && p.quantile <= 1.0))
      throw std::invalid_argument("quantile must be a number in [0, 1]: '" + body + "'");
    return p;
  }
  throw std::invalid_argument("lambda policy must be fixed:<q> or quantile:<f>, got '" + std::string(text) + "'");
}

std::string format_lambda_policy(const LambdaPolicy& p) {
  if (p.kind == LambdaPolicy::Kind::fixed) return "fixed:" + format_rational(p.value);
  std::ostringstream os;
  os << "quantile:" << p.quantile;
  return os.str();
}

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!n_range.valid() || n_range.lo < 0) fail("n range must be a non-empty range of non-negative integers");
  if (n_range.hi > static_cast<std::int64_t>(std::min(enumeration_limit, kMaxVertices)))
    fail("n range exceeds the enumeration limit");
  if (!link_range.valid() || link_range.lo < 0) fail("link range must be non-empty and non-negative");
  if (link_range.hi > 0 && n_range.lo < 2) fail("links need at least two vertices");
  if (!cap_range.valid() || cap_range.lo < 0) fail("capacity range must be non-empty and non-negative");
  if (!cost_range.valid() || cost_range.lo < 0) fail("cost range must be non-empty and non-negative");
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) fail("edge density must lie in [0, 1]");
  if (lambda_policy.kind == LambdaPolicy::Kind::quantile &&
      !(lambda_policy.quantile >= 0.0 && lambda_policy.quantile <= 1.0))
    fail("quantile must lie in [0, 1]");
  if (max_retries == 0) fail("max retries must be positive");
}

Rational quantile_lambda(const CapGraph& g, double quantile, std::size_t limit) {
  const std::vector<Rational> values = cut_values(g, limit);
  if (values.empty()) return Rational(0);
  const auto idx = static_cast<std::size_t>(std::floor(quantile * static_cast<double>(values.size() - 1)));
  const Rational& at = values[std::min(idx, values.size() - 1)];
  auto above = std::upper_bound(values.begin(), values.end(), at);
  if (above != values.end()) return *above;
  if (values.front() < at) return at;
  return at + 1;
}

GeneratedInstance gen_instance(const RunConfig& cfg, std::size_t index) {
  cfg.validate();
  std::mt19937_64 rng(mix_seed(cfg.seed ^ mix_seed(static_cast<std::uint64_t>(index) + 1)));
  CapGraph graph;
  Rational lambda;
  SetFamily family;
  std::vector<Link> links;
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    if (attempt % kLinkDrawsPerGraph == 0) {
      graph = draw_graph(cfg, rng);
      lambda = pick_lambda(cfg, graph);
      family = enumerate_small_cuts(graph, lambda, cfg.enumeration_limit);
    }
    links = draw_links(cfg, graph.n(), rng);
    const bool feasible =
        std::all_of(family.begin(), family.end(), [&](NodeSet s) { return is_covered(s, links); });
    if (feasible) return {Instance(graph, lambda, links), true};
  }
  if (cfg.allow_infeasible) return {Instance(graph, lambda, links), false};
  throw GenerationExhausted("no feasible instance after " + std::to_string(cfg.max_retries) + " draws for index " +
                            std::to_string(index));
}

}  // namespace cutcover
