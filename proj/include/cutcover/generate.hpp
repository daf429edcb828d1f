#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cutcover/enumerate.hpp"
#include "cutcover/exact.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/properties.hpp"
#include "cutcover/rational.hpp"

namespace cutcover {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool valid() const { return lo <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a:b" or a single integer "a".
IntRange parse_range(std::string_view text);

struct LambdaPolicy {
  enum class Kind { fixed, quantile };
  Kind kind = Kind::quantile;
  Rational value;         // fixed threshold
  double quantile = 0.2;  // in [0, 1]
};

/// "fixed:<rational>" or "quantile:<f>".
LambdaPolicy parse_lambda_policy(std::string_view text);
std::string format_lambda_policy(const LambdaPolicy& p);

enum class AuditMode { per_phase, final_only };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t count = 10;
  IntRange n_range{4, 10};
  IntRange link_range{3, 14};
  double edge_density = 0.5;
  IntRange cap_range{1, 10};
  IntRange cost_range{1, 10};
  LambdaPolicy lambda_policy;
  AuditMode audit_mode = AuditMode::per_phase;
  /// γ* tuple budget per residual family; 0 skips the γ* check.
  std::uint64_t sample_budget = kDefaultSampleBudget;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  std::size_t exact_limit = kDefaultExactLinkLimit;
  std::size_t max_retries = 2000;
  bool allow_infeasible = false;
  bool fail_fast = false;
  /// Worker threads for batch runs; 0 uses the OpenMP default.
  std::size_t threads = 0;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

struct GeneratedInstance {
  Instance instance;
  bool feasible = true;
};

/// Threshold at the given quantile of the non-trivial cut values: the
/// smallest cut value strictly above the quantile value, so every cut at or
/// below the quantile is small. Falls back to the maximum cut value when the
/// quantile is the maximum, and to max + 1 when all cuts are equal.
Rational quantile_lambda(const CapGraph& g, double quantile, std::size_t limit = kDefaultEnumerationLimit);

/// Deterministic in (cfg.seed, index). Resamples until every small cut is
/// covered by some link, up to cfg.max_retries; then either returns the last
/// draw flagged infeasible (cfg.allow_infeasible) or throws
/// GenerationExhausted.
GeneratedInstance gen_instance(const RunConfig& cfg, std::size_t index);

/// SplitMix64 finalizer; also used to derive per-item seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace cutcover
