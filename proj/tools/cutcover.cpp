// cutcover: generate instances, solve them, audit the runs, compare to the exact optimum.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutcover/errors.hpp"
#include "cutcover/generate.hpp"
#include "cutcover/instance_io.hpp"
#include "cutcover/pipeline.hpp"

namespace {

using namespace cutcover;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  RunConfig cfg;
  std::string n_range = "4:10";
  std::string link_range = "3:14";
  std::string cap_range = "1:10";
  std::string cost_range = "1:10";
  std::string lambda_policy = "quantile:0.2";
  std::string audit = "per-phase";
  std::string format = "json";
  std::string input;
  std::string out;
  std::string csv;
  std::string summary_out;
};

void add_generation_flags(CLI::App* app, Options& o) {
  app->add_option("--seed", o.cfg.seed, "Master seed (CUTCOVER_SEED overrides)")->capture_default_str();
  app->add_option("--count", o.cfg.count, "Number of instances to generate")->capture_default_str();
  app->add_option("--n-range", o.n_range, "Vertex count range a:b")->capture_default_str();
  app->add_option("--links-range", o.link_range, "Link count range a:b")->capture_default_str();
  app->add_option("--cap-range", o.cap_range, "Integer edge capacity range a:b")->capture_default_str();
  app->add_option("--cost-range", o.cost_range, "Integer link cost range a:b")->capture_default_str();
  app->add_option("--density", o.cfg.edge_density, "Edge probability per vertex pair")->capture_default_str();
  app->add_option("--lambda-policy", o.lambda_policy, "fixed:<p/q> or quantile:<f>")->capture_default_str();
  app->add_option("--max-retries", o.cfg.max_retries, "Resampling bound per instance")->capture_default_str();
  app->add_flag("--allow-infeasible", o.cfg.allow_infeasible, "Emit flagged instances instead of failing");
}

void add_run_flags(CLI::App* app, Options& o) {
  app->add_option("--input", o.input, "Instance file (object, array or JSON lines; - for stdin)");
  app->add_option("--audit", o.audit, "Audited phases")
      ->check(CLI::IsMember({"per-phase", "final"}))
      ->capture_default_str();
  app->add_option("--format", o.format, "Report format on stdout")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app->add_option("--sample-budget", o.cfg.sample_budget, "Tuple budget for the gamma* check (0 skips it)")
      ->capture_default_str();
  app->add_option("--exact-limit", o.cfg.exact_limit, "Skip the exact optimum above this many links")
      ->capture_default_str();
  app->add_option("--threads", o.cfg.threads, "Worker threads (0 = OpenMP default)")->capture_default_str();
  app->add_flag("--fail-fast", o.cfg.fail_fast, "Stop after the first failing instance");
  app->add_option("--out", o.out, "Write the report here instead of stdout");
  app->add_option("--csv", o.csv, "Also write the aggregate CSV here");
  app->add_option("--summary-out", o.summary_out, "Write the batch summary JSON here");
}

void finish_config(Options& o) {
  if (const char* env = std::getenv("CUTCOVER_SEED"); env && *env) {
    std::uint64_t seed = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw std::invalid_argument("CUTCOVER_SEED is not an unsigned integer: " + std::string(text));
    o.cfg.seed = seed;
  }
  o.cfg.n_range = parse_range(o.n_range);
  o.cfg.link_range = parse_range(o.link_range);
  o.cfg.cap_range = parse_range(o.cap_range);
  o.cfg.cost_range = parse_range(o.cost_range);
  o.cfg.lambda_policy = parse_lambda_policy(o.lambda_policy);
  o.cfg.audit_mode = o.audit == "final" ? AuditMode::final_only : AuditMode::per_phase;
  o.cfg.validate();
}

std::vector<GeneratedInstance> load_or_generate(const Options& o) {
  std::vector<GeneratedInstance> items;
  if (!o.input.empty()) {
    std::vector<Instance> read;
    if (o.input == "-") {
      read = read_instances(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) throw ParseError("cannot open " + o.input);
      read = read_instances(in);
    }
    for (auto& inst : read) items.push_back(GeneratedInstance{std::move(inst), true});
    return items;
  }
  for (std::size_t i = 0; i < o.cfg.count; ++i) items.push_back(gen_instance(o.cfg, i));
  return items;
}

// stdout unless a path is given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_gen(const Options& o) {
  Sink sink(o.out);
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < o.cfg.count; ++i) {
    const auto gi = gen_instance(o.cfg, i);
    if (!gi.feasible) ++flagged;
    sink.stream() << serialize_instance(gi.instance) << '\n';
  }
  if (flagged > 0) std::cerr << "cutcover: " << flagged << " instance(s) flagged infeasible\n";
  return 0;
}

int run_reports(const Options& o, const PipelineStages& stages) {
  const auto items = load_or_generate(o);
  const BatchReport batch = run_batch(o.cfg, items, stages);

  Sink sink(o.out);
  sink.stream() << (o.format == "csv" ? to_csv(batch) : to_json_lines(batch));
  if (!o.csv.empty()) write_file(o.csv, to_csv(batch));
  const auto summary = summary_json(batch);
  if (!o.summary_out.empty()) write_file(o.summary_out, summary.dump(2) + "\n");
  std::cerr << summary.dump() << '\n';

  for (const auto& r : batch.instances)
    if (r.error) std::cerr << "cutcover: instance " << r.index << ": " << *r.error << '\n';
  if (!batch.pass()) {
    std::cerr << "cutcover: some checks failed\n";
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primal-dual augmentation of small cuts, with certification audits"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write generated instances as JSON lines");
  add_generation_flags(gen, o);
  gen->add_option("--out", o.out, "Write here instead of stdout");

  auto* solve = app.add_subcommand("solve", "Solve instances and check the primal-dual guarantees");
  auto* audit = app.add_subcommand("audit", "Solve, then audit witness families and set-family properties");
  auto* exact = app.add_subcommand("exact", "Solve and compare with the exact optimum");
  auto* bench = app.add_subcommand("bench", "Every stage, with an aggregate summary");
  for (auto* sub : {solve, audit, exact, bench}) {
    add_generation_flags(sub, o);
    add_run_flags(sub, o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    finish_config(o);
    if (gen->parsed()) return run_gen(o);
    if (solve->parsed()) return run_reports(o, PipelineStages{false, false, false});
    if (audit->parsed()) return run_reports(o, PipelineStages{true, true, false});
    if (exact->parsed()) return run_reports(o, PipelineStages{false, false, true});
    return run_reports(o, PipelineStages{true, true, true});
  } catch (const std::invalid_argument& e) {
    std::cerr << "cutcover: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "cutcover: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cutcover: " << e.what() << '\n';
    return kExitFail;
  }
}
