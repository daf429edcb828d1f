#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutcover/certify.hpp"
#include "cutcover/exact.hpp"
#include "cutcover/generate.hpp"
#include "cutcover/primal_dual.hpp"
#include "cutcover/properties.hpp"

namespace cutcover {

/// Pass/fail tallies of one named check across a batch.
struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void add(bool ok) { ok ? ++passed : ++failed; }
};

struct InstanceReport {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t num_links = 0;
  std::size_t family_size = 0;
  bool feasible = true;
  std::optional<std::string> error;

  std::optional<SolveResult> solve;
  std::vector<AuditReport> audits;      // smallest-first witness families
  std::vector<AuditReport> alt_audits;  // largest-first witness families
  std::vector<PropertyReport> lemma_reports;
  std::optional<ExactResult> exact;
  std::optional<Rational> ratio;
  std::optional<Rational> max_density;  // max |L*| / |C| over audited phases

  bool cover_ok = true;
  bool dual_feasible = true;
  bool minimal = true;
  bool dual_bound = true;  // cost <= 5 Σy
  bool dual_le_opt = true;
  bool ratio_ok = true;

  bool pass() const;
};

struct BatchReport {
  std::vector<InstanceReport> instances;

  std::size_t infeasible = 0;
  std::size_t errors = 0;
  std::optional<Rational> min_ratio;
  std::optional<Rational> mean_ratio;
  std::optional<Rational> max_ratio;
  std::optional<Rational> max_density;
  std::map<std::string, Tally> tallies;

  bool pass() const;
};

/// What to run per instance.
struct PipelineStages {
  bool audit = true;
  bool lemmas = true;
  bool exact = true;
};

InstanceReport run_instance(const RunConfig& cfg, const GeneratedInstance& gi, std::size_t index,
                            const PipelineStages& stages = {});

/// Runs `items` on a bounded worker pool; reports come back in input order.
BatchReport run_batch(const RunConfig& cfg, const std::vector<GeneratedInstance>& items,
                      const PipelineStages& stages = {});

/// Generates cfg.count instances and runs every stage on them.
BatchReport run_pipeline(const RunConfig& cfg);

nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const ExactResult& r);
nlohmann::json to_json(const InstanceReport& r);
nlohmann::json summary_json(const BatchReport& b);

/// One JSON object per line, in instance order, followed by nothing else.
std::string to_json_lines(const BatchReport& b);

std::string csv_header();
std::string to_csv_row(const InstanceReport& r);
std::string to_csv(const BatchReport& b);

}  // namespace cutcover
