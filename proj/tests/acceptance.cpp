// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Tolerances: every comparison below is exact rational or exact integer
// arithmetic (tolerance 0).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cutcover/certify.hpp"
#include "cutcover/enumerate.hpp"
#include "cutcover/exact.hpp"
#include "cutcover/family.hpp"
#include "cutcover/generate.hpp"
#include "cutcover/pipeline.hpp"
#include "cutcover/primal_dual.hpp"
#include "cutcover/properties.hpp"
#include "support.hpp"

using namespace cutcover;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kInstances = 500;
constexpr std::uint64_t kSampleBudget = 100000;
constexpr std::size_t kResidualDraws = 50;

int failures = 0;

void verdict(int id, bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << detail << '\n';
  if (!ok) ++failures;
}

RunConfig batch_config() {
  RunConfig cfg;
  cfg.seed = kSeed;
  cfg.count = kInstances;
  cfg.n_range = {4, 10};
  cfg.link_range = {3, 14};
  cfg.cap_range = {1, 10};
  cfg.cost_range = {1, 10};
  cfg.lambda_policy = parse_lambda_policy("quantile:0.2");
  cfg.audit_mode = AuditMode::per_phase;
  cfg.sample_budget = kSampleBudget;
  return cfg;
}

SetFamily phase_residual(const Instance& inst, const SetFamily& f, const SolveResult& r, std::size_t phase) {
  const std::span<const std::size_t> covered(r.addition_order.data(), r.trace[phase].picked_before);
  return residual(f, select_links(inst.links(), covered));
}

bool base_lemmas(const SetFamily& f) {
  return check_symmetry(f).holds && check_pliable(f).holds && check_structural_submodularity(f).holds &&
         check_disjoint_cores(f).holds && check_sparse_crossing(f).holds;
}

bool residual_lemmas(const SetFamily& f) {
  // Residual families need not be symmetric.
  return check_pliable(f).holds && check_structural_submodularity(f).holds && check_disjoint_cores(f).holds &&
         check_sparse_crossing(f).holds;
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  const RunConfig cfg = batch_config();

  std::vector<GeneratedInstance> items;
  for (std::size_t i = 0; i < cfg.count; ++i) items.push_back(gen_instance(cfg, i));
  const BatchReport batch = run_batch(cfg, items);

  // Sparser graphs and a higher threshold give more non-singleton cores, so
  // more witness sets cross a core. Audited in addition to the main batch.
  RunConfig sparse = cfg;
  sparse.seed = kSeed + 1;
  sparse.edge_density = 0.3;
  sparse.lambda_policy = parse_lambda_policy("quantile:0.5");
  sparse.allow_infeasible = true;
  std::vector<GeneratedInstance> sparse_items;
  for (std::size_t i = 0; i < sparse.count; ++i) sparse_items.push_back(gen_instance(sparse, i));
  const BatchReport sparse_batch = run_batch(sparse, sparse_items, PipelineStages{true, false, false});

  // 1. Guarantee.
  {
    std::size_t feasible = 0, exact = 0, bad = 0;
    for (const auto& r : batch.instances) {
      if (!r.feasible || r.error) {
        ++bad;
        continue;
      }
      ++feasible;
      if (r.exact) ++exact;
      if (!r.exact || !r.ratio || *r.ratio > 5 || !r.dual_bound || !r.dual_le_opt || !r.cover_ok ||
          !r.dual_feasible)
        ++bad;
    }
    std::ostringstream d;
    d << feasible << " feasible instances, " << exact << " with exact optimum, max ratio "
      << (batch.max_ratio ? format_rational(*batch.max_ratio) : "n/a") << ", mean ratio "
      << (batch.mean_ratio ? std::to_string(to_double(*batch.mean_ratio)) : "n/a")
      << ", violations " << bad << " (ratio <= 5, cost <= 5*dual, dual <= opt; exact, tolerance 0)";
    verdict(1, feasible >= kInstances && exact == feasible && bad == 0, "approximation guarantee", d.str());
  }

  // 2. Crossing density.
  {
    std::ostringstream d;
    bool ok = true;
    for (const auto* b : {&batch, &sparse_batch}) {
      std::size_t phases = 0, bad = 0, nonempty = 0;
      for (const auto& r : b->instances) {
        if (r.error) ++bad;
        for (const auto* list : {&r.audits, &r.alt_audits})
          for (const auto& a : *list) {
            ++phases;
            if (a.num_lstar > 0) ++nonempty;
            if (a.num_lstar > 2 * a.num_cores || a.crossing_pairs != a.num_lstar || !a.sparse_crossing) ++bad;
          }
      }
      const bool quotient_ok = !b->max_density || *b->max_density <= 2;
      ok = ok && phases > 0 && bad == 0 && quotient_ok;
      d << (b == &batch ? "" : "; sparse batch: ") << phases << " phase audits (" << nonempty
        << " with non-empty L*), max |L*|/|C| " << (b->max_density ? format_rational(*b->max_density) : "n/a")
        << ", violations " << bad;
    }
    d << " (bound 2, exact)";
    verdict(2, ok, "crossing density", d.str());
  }

  // 3. Lemma suite for n <= 8: base family and 50 random residuals each.
  {
    std::size_t families = 0, bad = 0, instances = 0;
    std::mt19937_64 rng(mix_seed(kSeed ^ 3));
    for (const auto& gi : items) {
      const Instance& inst = gi.instance;
      if (inst.n() > 8) continue;
      ++instances;
      const SetFamily f = enumerate_small_cuts(inst.graph(), inst.lambda());
      ++families;
      if (!base_lemmas(f)) ++bad;
      for (std::size_t draw = 0; draw < kResidualDraws; ++draw) {
        const std::size_t count = 1 + rng() % inst.n();
        const auto links = cutcover::testing::random_links(rng, inst.n(), count, 1);
        ++families;
        if (!residual_lemmas(residual(f, links))) ++bad;
      }
    }
    std::ostringstream d;
    d << instances << " instances with n <= 8, " << families << " families checked exhaustively, failures " << bad;
    verdict(3, instances > 0 && bad == 0, "lemma suite", d.str());
  }

  // 4. Gamma*: exhaustive for n <= 6, budgeted for n <= 10, on both batches.
  {
    std::size_t exhaustive_families = 0, sampled_families = 0, bad = 0;
    std::uint64_t exhaustive_tuples = 0, sampled_tuples = 0;
    auto scan = [&](const std::vector<GeneratedInstance>& list, const BatchReport& b, std::uint64_t seed) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& r = b.instances[i];
        if (!r.solve) continue;
        const Instance& inst = list[i].instance;
        const SetFamily f = enumerate_small_cuts(inst.graph(), inst.lambda());
        for (std::size_t p = 0; p < r.solve->trace.size(); ++p) {
          const SetFamily f_res = phase_residual(inst, f, *r.solve, p);
          if (inst.n() <= 6) {
            const auto rep = check_gamma_star(f_res, std::numeric_limits<std::uint64_t>::max(), 0);
            ++exhaustive_families;
            exhaustive_tuples += rep.tuples_tested;
            if (!rep.holds || !rep.exhaustive) ++bad;
          }
          const auto rep = check_gamma_star(f_res, kSampleBudget, mix_seed(seed ^ (i * 1024 + p)));
          ++sampled_families;
          sampled_tuples += rep.tuples_tested;
          if (!rep.holds) ++bad;
        }
      }
    };
    scan(items, batch, kSeed);
    scan(sparse_items, sparse_batch, sparse.seed);
    std::ostringstream d;
    d << exhaustive_families << " residuals (n <= 6) exhaustive over " << exhaustive_tuples << " tuples, "
      << sampled_families << " residuals (n <= 10) at budget " << kSampleBudget << " over " << sampled_tuples
      << " tuples, failures " << bad;
    verdict(4, exhaustive_families > 0 && bad == 0, "gamma* remainder property", d.str());
  }

  // 5. Tree lemmas.
  {
    std::size_t phases = 0, red = 0, remainder = 0, disjoint = 0;
    for (const auto* b : {&batch, &sparse_batch})
      for (const auto& r : b->instances)
        for (const auto* list : {&r.audits, &r.alt_audits})
          for (const auto& a : *list) {
            ++phases;
            if (!a.red_cover) ++red;
            if (!a.empty_remainder) ++remainder;
            if (!a.disjoint_child) ++disjoint;
          }
    std::ostringstream d;
    d << phases << " phase audits over both batches; failures: red cover " << red << ", empty remainder " << remainder
      << ", disjoint child " << disjoint;
    verdict(5, phases > 0 && red + remainder + disjoint == 0, "tree lemmas", d.str());
  }

  // 6. Oracle equivalences.
  {
    std::mt19937_64 rng(mix_seed(kSeed ^ 6));
    std::uint64_t walked = 0, gray_bad = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      for (int round = 0; round < 3; ++round) {
        const auto g = cutcover::testing::random_graph(rng, n, 0.6, 10);
        const auto m = rational_capacities(g);
        GrayCutWalker<Rational> walk(m, n);
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t k = 0;; ++k) {
          ++walked;
          if (walk.cut() != cut_capacity(g, NodeSet(n, walk.bits()))) ++gray_bad;
          if (k + 1 == total) break;
          walk.advance();
        }
        const auto scaled = scale_capacities(g, Rational(0));
        if (!scaled) continue;
        GrayCutWalker<std::int64_t> iwalk(scaled->matrix, n);
        for (std::uint64_t k = 0;; ++k) {
          ++walked;
          if (Rational(iwalk.cut()) != cut_capacity(g, NodeSet(n, iwalk.bits())) * scaled->denominator) ++gray_bad;
          if (k + 1 == total) break;
          iwalk.advance();
        }
      }
    }

    std::size_t bb_checked = 0, bb_bad = 0;
    while (bb_checked < 100) {
      const std::size_t n = 3 + rng() % 6;
      const auto g = cutcover::testing::random_graph(rng, n, 0.5, 10);
      const auto values = cut_values(g);
      const Rational lambda = values[rng() % values.size()] + 1;
      const auto links = cutcover::testing::random_links(rng, n, 1 + rng() % 14, 10);
      const auto f = enumerate_small_cuts(g, lambda);
      const auto naive = cutcover::testing::naive_optimum(f, links);
      if (!naive) continue;
      ++bb_checked;
      if (exact_optimum(Instance(g, lambda, links), f).opt_cost != *naive) ++bb_bad;
    }

    std::size_t minimal_bad = 0, minimal_checked = 0;
    for (const auto& r : batch.instances) {
      if (!r.solve) continue;
      ++minimal_checked;
      if (!r.minimal) ++minimal_bad;
    }

    std::ostringstream d;
    d << "gray walk " << walked << " subsets up to n = 12 (" << gray_bad << " mismatches); branch-and-bound vs naive "
      << bb_checked << " instances (" << bb_bad << " mismatches); reverse delete minimal on " << minimal_checked
      << " runs (" << minimal_bad << " not minimal)";
    verdict(6, gray_bad == 0 && bb_bad == 0 && minimal_bad == 0 && minimal_checked > 0, "oracle equivalences",
            d.str());
  }

  // 7. Determinism.
  {
    RunConfig serial = cfg;
    serial.threads = 1;
    std::vector<GeneratedInstance> again;
    for (std::size_t i = 0; i < serial.count; ++i) again.push_back(gen_instance(serial, i));
    const BatchReport second = run_batch(serial, again);
    const std::string a = to_json_lines(batch) + to_csv(batch) + summary_json(batch).dump();
    const std::string b = to_json_lines(second) + to_csv(second) + summary_json(second).dump();
    std::ostringstream d;
    d << a.size() << " report bytes, " << (a == b ? "identical" : "different") << " across two runs";
    verdict(7, a == b, "determinism", d.str());
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << "  (" << seconds
            << " s, seed " << kSeed << ")\n";
  return failures == 0 ? 0 : 1;
}
