#include "cutcover/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

#include "cutcover/errors.hpp"
#include "cutcover/instance_io.hpp"

namespace cutcover {

using nlohmann::json;

namespace {

json set_to_json(NodeSet s) { return s.members(); }

json family_to_json(const SetFamily& f) {
  json out = json::array();
  for (const auto& s : f) out.push_back(set_to_json(s));
  return out;
}

void push_lemmas(std::vector<PropertyReport>& out, const SetFamily& f) {
  out.push_back(check_symmetry(f));
  out.push_back(check_pliable(f));
  out.push_back(check_structural_submodularity(f));
  out.push_back(check_disjoint_cores(f));
  out.push_back(check_sparse_crossing(f));
}

std::vector<std::size_t> audited_phases(const RunConfig& cfg, const SolveResult& r) {
  std::vector<std::size_t> phases;
  if (r.trace.empty()) return phases;
  if (cfg.audit_mode == AuditMode::final_only) return {r.trace.size() - 1};
  for (std::size_t p = 0; p < r.trace.size(); ++p) phases.push_back(p);
  return phases;
}

void fold_density(std::optional<Rational>& best, const AuditReport& a) {
  if (a.num_cores == 0) return;
  Rational q(static_cast<long long>(a.num_lstar), static_cast<long long>(a.num_cores));
  if (!best || q > *best) best = q;
}

}  // namespace

bool InstanceReport::pass() const {
  if (error) return false;
  if (!feasible) return true;
  const bool audits_ok = std::all_of(audits.begin(), audits.end(), [](const AuditReport& a) { return a.pass; }) &&
                         std::all_of(alt_audits.begin(), alt_audits.end(), [](const AuditReport& a) { return a.pass; });
  const bool lemmas_ok =
      std::all_of(lemma_reports.begin(), lemma_reports.end(), [](const PropertyReport& p) { return p.holds; });
  return audits_ok && lemmas_ok && cover_ok && dual_feasible && minimal && dual_bound && dual_le_opt && ratio_ok;
}

bool BatchReport::pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceReport& r) { return r.pass(); });
}

InstanceReport run_instance(const RunConfig& cfg, const GeneratedInstance& gi, std::size_t index,
                            const PipelineStages& stages) {
  const Instance& inst = gi.instance;
  InstanceReport r;
  r.index = index;
  r.n = inst.n();
  r.num_links = inst.links().size();
  r.feasible = gi.feasible;
  try {
    const SetFamily family = enumerate_small_cuts(inst.graph(), inst.lambda(), cfg.enumeration_limit);
    r.family_size = family.size();
    if (stages.lemmas) push_lemmas(r.lemma_reports, family);

    SolveResult solved;
    try {
      solved = solve(inst, family);
    } catch (const Infeasible& e) {
      r.feasible = false;
      return r;
    }
    r.feasible = true;

    const auto& links = inst.links();
    r.cover_ok = covers_family(family, links, solved.solution) &&
                 total_cost(links, solved.solution) == solved.cost;
    r.dual_feasible = dual_feasible(inst, solved.dual);
    r.minimal = is_inclusion_minimal(family, links, solved.solution);
    r.dual_bound = solved.cost <= 5 * solved.dual.total;

    for (auto phase : audited_phases(cfg, solved)) {
      if (stages.audit) {
        r.audits.push_back(audit_phase(inst, family, solved, phase, WitnessOrder::smallest_first));
        r.alt_audits.push_back(audit_phase(inst, family, solved, phase, WitnessOrder::largest_first));
        fold_density(r.max_density, r.audits.back());
        fold_density(r.max_density, r.alt_audits.back());
      }
      if (stages.lemmas) {
        const auto& trace = solved.trace[phase];
        const std::span<const std::size_t> covered(solved.addition_order.data(), trace.picked_before);
        const SetFamily f_res = residual(family, select_links(links, covered));
        push_lemmas(r.lemma_reports, f_res);
        if (cfg.sample_budget > 0)
          r.lemma_reports.push_back(check_gamma_star(f_res, cfg.sample_budget,
                                                     mix_seed(cfg.seed ^ mix_seed(index * 1024 + phase))));
      }
    }

    if (stages.exact && links.size() <= cfg.exact_limit) {
      ExactResult opt = exact_optimum(inst, family, Incumbent{solved.cost, solved.solution}, cfg.exact_limit);
      r.ratio = ratio(solved, opt);
      r.dual_le_opt = solved.dual.total <= opt.opt_cost;
      r.ratio_ok = *r.ratio <= 5;
      r.exact = std::move(opt);
    }
    r.solve = std::move(solved);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

BatchReport run_batch(const RunConfig& cfg, const std::vector<GeneratedInstance>& items, const PipelineStages& stages) {
  BatchReport batch;
  std::vector<InstanceReport> reports(items.size());
  std::size_t first_failure = items.size();
  const int threads = cfg.threads > 0 ? static_cast<int>(cfg.threads) : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(items.size()); ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (cfg.fail_fast) {
      std::size_t stop;
#pragma omp atomic read
      stop = first_failure;
      if (i > stop) continue;
    }
    reports[i] = run_instance(cfg, items[i], i, stages);
    if (cfg.fail_fast && !reports[i].pass()) {
#pragma omp critical(cutcover_fail_fast)
      if (i < first_failure) {
#pragma omp atomic write
        first_failure = i;
      }
    }
  }
  if (cfg.fail_fast && first_failure < reports.size()) reports.resize(first_failure + 1);

  Rational ratio_sum = 0;
  std::size_t ratio_count = 0;
  for (const auto& r : reports) {
    if (r.error) ++batch.errors;
    if (!r.feasible) ++batch.infeasible;
    if (r.ratio) {
      if (!batch.min_ratio || *r.ratio < *batch.min_ratio) batch.min_ratio = *r.ratio;
      if (!batch.max_ratio || *r.ratio > *batch.max_ratio) batch.max_ratio = *r.ratio;
      ratio_sum += *r.ratio;
      ++ratio_count;
    }
    if (r.max_density && (!batch.max_density || *r.max_density > *batch.max_density))
      batch.max_density = r.max_density;
    if (r.error || !r.feasible) continue;
    batch.tallies["cover"].add(r.cover_ok);
    batch.tallies["dual_feasible"].add(r.dual_feasible);
    batch.tallies["minimal"].add(r.minimal);
    batch.tallies["dual_bound"].add(r.dual_bound);
    if (r.exact) {
      batch.tallies["dual_le_opt"].add(r.dual_le_opt);
      batch.tallies["ratio"].add(r.ratio_ok);
    }
    for (const auto& a : r.audits) batch.tallies["audit"].add(a.pass);
    for (const auto& a : r.alt_audits) batch.tallies["audit_largest_first"].add(a.pass);
    for (const auto& p : r.lemma_reports) batch.tallies[std::string(property_name(p.property))].add(p.holds);
  }
  if (ratio_count > 0) batch.mean_ratio = ratio_sum / static_cast<long long>(ratio_count);
  batch.instances = std::move(reports);
  return batch;
}

BatchReport run_pipeline(const RunConfig& cfg) {
  cfg.validate();
  std::vector<GeneratedInstance> items(cfg.count);
  std::vector<std::string> failures(cfg.count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(cfg.count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      items[i] = gen_instance(cfg, i);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw GenerationExhausted(f);
  return run_batch(cfg, items);
}

json to_json(const SolveResult& r) {
  json phases = json::array();
  for (const auto& t : r.trace) {
    phases.push_back({{"phase", t.phase},
                      {"picked_before", t.picked_before},
                      {"epsilon", rational_to_json(t.epsilon)},
                      {"tight", t.tight_link_ids},
                      {"cores", family_to_json(t.cores_snapshot)},
                      {"residual_size", t.residual_size}});
  }
  json dual = json::array();
  for (const auto& [s, y] : r.dual.y) dual.push_back({{"set", set_to_json(s)}, {"y", rational_to_json(y)}});
  return {{"solution", r.solution},
          {"cost", rational_to_json(r.cost)},
          {"addition_order", r.addition_order},
          {"dual_total", rational_to_json(r.dual.total)},
          {"dual", std::move(dual)},
          {"phases", std::move(phases)}};
}

json to_json(const AuditReport& a) {
  return {{"phase", a.phase},
          {"cores", a.num_cores},
          {"witnesses", a.num_witnesses},
          {"lstar", a.num_lstar},
          {"crossing_pairs", a.crossing_pairs},
          {"red_nodes", a.red_nodes},
          {"witness_valid", a.witness_valid},
          {"sparse_crossing", a.sparse_crossing},
          {"density_bound", a.density_bound},
          {"red_cover", a.red_cover},
          {"empty_remainder", a.empty_remainder},
          {"disjoint_child", a.disjoint_child},
          {"pass", a.pass}};
}

json to_json(const PropertyReport& p) {
  json out = {{"property", std::string(property_name(p.property))}, {"holds", p.holds}};
  if (!p.holds) {
    json ce = json::array();
    for (const auto& s : p.counterexample) ce.push_back(set_to_json(s));
    out["counterexample"] = std::move(ce);
  }
  if (p.property == Property::gamma || p.property == Property::gamma_star) {
    out["tuples_tested"] = p.tuples_tested;
    out["tuples_total"] = p.tuples_total;
    out["max_k"] = p.max_k;
    out["exhaustive"] = p.exhaustive;
  }
  return out;
}

json to_json(const ExactResult& e) {
  return {{"opt_cost", rational_to_json(e.opt_cost)}, {"opt_links", e.opt_links}, {"nodes", e.nodes_explored}};
}

json to_json(const InstanceReport& r) {
  json out = {{"index", r.index},
              {"n", r.n},
              {"links", r.num_links},
              {"family_size", r.family_size},
              {"feasible", r.feasible},
              {"pass", r.pass()}};
  if (r.error) out["error"] = *r.error;
  if (r.solve) out["solve"] = to_json(*r.solve);
  if (!r.audits.empty()) {
    json audits = json::array();
    for (const auto& a : r.audits) audits.push_back(to_json(a));
    out["audits"] = std::move(audits);
    json alt = json::array();
    for (const auto& a : r.alt_audits) alt.push_back(to_json(a));
    out["audits_largest_first"] = std::move(alt);
  }
  if (!r.lemma_reports.empty()) {
    // Base family first, then one group per audited phase.
    json lemmas = json::object();
    for (const auto& p : r.lemma_reports) {
      json& entry = lemmas[std::string(property_name(p.property))];
      if (entry.is_null()) entry = {{"checked", 0}, {"failed", 0}};
      entry["checked"] = entry["checked"].get<std::size_t>() + 1;
      if (!p.holds) {
        entry["failed"] = entry["failed"].get<std::size_t>() + 1;
        if (!entry.contains("first_failure")) entry["first_failure"] = to_json(p);
      }
      if (p.property == Property::gamma_star) {
        entry["tuples_tested"] = entry.value("tuples_tested", std::uint64_t{0}) + p.tuples_tested;
        entry["max_k"] = std::max(entry.value("max_k", std::size_t{0}), p.max_k);
        entry["exhaustive"] = entry.value("exhaustive", true) && p.exhaustive;
      }
    }
    out["lemmas"] = std::move(lemmas);
  }
  if (r.feasible && r.solve) {
    out["checks"] = {{"cover", r.cover_ok},         {"dual_feasible", r.dual_feasible},
                     {"minimal", r.minimal},        {"cost_le_5_dual", r.dual_bound},
                     {"dual_le_opt", r.dual_le_opt}, {"ratio_le_5", r.ratio_ok}};
  }
  if (r.exact) out["exact"] = to_json(*r.exact);
  if (r.ratio) out["ratio"] = rational_to_json(*r.ratio);
  if (r.max_density) out["max_density"] = rational_to_json(*r.max_density);
  return out;
}

json summary_json(const BatchReport& b) {
  json tallies = json::object();
  for (const auto& [name, t] : b.tallies) tallies[name] = {{"passed", t.passed}, {"failed", t.failed}};
  auto opt = [](const std::optional<Rational>& r) -> json { return r ? rational_to_json(*r) : json(nullptr); };
  return {{"instances", b.instances.size()},
          {"infeasible", b.infeasible},
          {"errors", b.errors},
          {"min_ratio", opt(b.min_ratio)},
          {"mean_ratio", opt(b.mean_ratio)},
          {"max_ratio", opt(b.max_ratio)},
          {"max_density", opt(b.max_density)},
          {"tallies", std::move(tallies)},
          {"pass", b.pass()}};
}

std::string to_json_lines(const BatchReport& b) {
  std::string out;
  for (const auto& r : b.instances) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string csv_header() {
  return "instance,n,links,family_size,phases,alg_cost,dual_total,opt,ratio,max_density,ratio_decimal,pass\n";
}

std::string to_csv_row(const InstanceReport& r) {
  std::ostringstream os;
  auto rat = [](const std::optional<Rational>& v) { return v ? format_rational(*v) : std::string(); };
  os << r.index << ',' << r.n << ',' << r.num_links << ',' << r.family_size << ',';
  if (r.solve) {
    os << r.solve->trace.size() << ',' << format_rational(r.solve->cost) << ','
       << format_rational(r.solve->dual.total) << ',';
  } else {
    os << ",,,";
  }
  os << (r.exact ? format_rational(r.exact->opt_cost) : std::string()) << ',' << rat(r.ratio) << ','
     << rat(r.max_density) << ',';
  if (r.ratio) os << to_double(*r.ratio);
  os << ',' << (r.pass() ? 1 : 0) << '\n';
  return os.str();
}

std::string to_csv(const BatchReport& b) {
  std::string out = csv_header();
  for (const auto& r : b.instances) out += to_csv_row(r);
  return out;
}

}  // namespace cutcover
