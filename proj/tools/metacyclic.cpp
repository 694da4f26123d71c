// Command-line front end: weights, diameters, bounds, reference tables,
// verification sweeps and the weight cache.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "metacyclic/bounds.hpp"
#include "metacyclic/error.hpp"
#include "metacyclic/group.hpp"
#include "metacyclic/omega.hpp"
#include "metacyclic/parallel.hpp"
#include "metacyclic/simd/kernels.hpp"
#include "metacyclic/tables.hpp"
#include "metacyclic/verify.hpp"
#include "metacyclic/version.hpp"
#include "metacyclic/weight_cache.hpp"

namespace mc = metacyclic;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

json envelope(const char* command) {
  json j;
  j["schema_version"] = mc::kSchemaVersion;
  j["command"] = command;
  return j;
}

struct WeightArgs {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string seq;
  std::int64_t level = 0;
  bool alpha = false;
  bool no_cache = false;
  bool timing = false;
  std::uint64_t max_nodes = 0;
};

int run_weight(const WeightArgs& a, const std::string& cache_path) {
  const mc::UnitContext ctx = mc::build_context(a.n, a.k);
  const mc::SearchLimits limits{a.max_nodes};
  std::string mode;
  std::string key;
  if (!a.seq.empty()) {
    mode = "seq";
    key = "seq:" + mc::ExponentSeq::parse(a.seq, ctx.alpha()).to_string();
  } else if (a.level > 0) {
    mode = "level";
    key = "level:" + std::to_string(a.level);
  } else {
    mode = "alpha";
    key = "alpha";
  }

  std::optional<mc::WeightCache> cache;
  if (!a.no_cache) cache.emplace(cache_path.empty() ? mc::WeightCache::default_path() : std::filesystem::path(cache_path));

  const auto start = std::chrono::steady_clock::now();
  std::optional<mc::WeightRecord> record;
  bool cached = false;
  if (cache) {
    record = cache->lookup(a.n, a.k, key);
    cached = record.has_value();
  }
  if (!record) {
    mc::WeightRecord r{a.n, a.k, key, {}, 0, {}, std::string(mc::kToolVersion)};
    if (mode == "seq") {
      const auto seq = mc::ExponentSeq::parse(a.seq, ctx.alpha());
      const auto w = mc::seq_weight(ctx, seq, limits);
      r.sequence.assign(seq.entries().begin(), seq.entries().end());
      r.weight = w.weight;
      r.witness = w.witness.bounds;
    } else if (mode == "level") {
      const auto w = mc::level_weight(ctx, a.level, limits);
      r.sequence.assign(w.sequence.entries().begin(), w.sequence.entries().end());
      r.weight = w.weight;
      r.witness = w.witness.bounds;
    } else {
      const auto w = mc::alpha_weight(ctx, limits);
      const auto full = mc::ExponentSeq::full(ctx.alpha());
      r.sequence.assign(full.entries().begin(), full.entries().end());
      r.weight = w.weight;
      r.witness = w.witness.bounds;
    }
    record = r;
    if (cache) cache->store(r);
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json j = envelope("weight");
  j["n"] = a.n;
  j["k"] = a.k;
  j["alpha"] = ctx.alpha();
  j["mode"] = mode;
  if (mode == "level") j["level"] = a.level;
  j["sequence"] = record->sequence;
  j["weight"] = record->weight;
  j["witness"] = record->witness;
  j["cached"] = cached;
  if (a.timing) j["elapsed"] = elapsed;
  std::cout << j.dump() << '\n';
  return kOk;
}

struct DiameterArgs {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::string norms_path;
  std::size_t max_elements = mc::kDefaultElementBudget;
};

int run_diameter(const DiameterArgs& a) {
  mc::NormTable table;
  json j = envelope("diameter");
  if (a.ell > 0) {
    const mc::GeneralPresentation g(a.m, a.ell, a.n, a.k);
    table = mc::all_norms(g, a.max_elements);
    j["m0"] = a.m;
    j["ell"] = a.ell;
  } else {
    table = mc::all_norms(mc::SplitPresentation(a.m, a.n, a.k), a.max_elements);
    j["m"] = a.m;
  }
  j["n"] = a.n;
  j["k"] = a.k;
  j["order"] = table.norms.size();
  j["diameter"] = table.diameter;
  if (!a.norms_path.empty()) {
    std::ofstream out(a.norms_path);
    if (!out) mc::fail(mc::ErrorKind::validation, "cannot write " + a.norms_path);
    table.write_csv(out);
    j["norms"] = a.norms_path;
  }
  std::cout << j.dump() << '\n';
  return kOk;
}

struct TableArgs {
  std::string which;
  bool check = false;
  unsigned jobs = 1;
};

int run_table(const TableArgs& a) {
  if (a.which == "omega-example") {
    const auto check = mc::write_omega_example(std::cout);
    if (a.check && !check.ok()) {
      for (const auto& m : check.mismatches) std::cerr << "mismatch: " << m << '\n';
      return kViolation;
    }
    return kOk;
  }
  const auto golden = mc::golden_table(a.which);
  const auto rows = mc::parallel_map<mc::TableRow>(golden.size(), a.jobs, [&](std::size_t i) {
    return mc::compute_table_row(golden[i].m, golden[i].n, golden[i].k);
  });
  mc::write_table_csv(std::cout, rows);
  if (!a.check) return kOk;
  int status = kOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto check = mc::check_table_row(golden[i], rows[i]);
    for (const auto& m : check.mismatches) {
      std::cerr << "mismatch (" << golden[i].m << "," << golden[i].n << "," << golden[i].k << "): " << m << '\n';
      status = kViolation;
    }
  }
  std::cerr << (status == kOk ? "check passed: " : "check failed: ") << rows.size() << " rows\n";
  return status;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_m;
  mc::SweepOptions options;
};

int run_verify(VerifyArgs a) {
  a.options.max_n = a.max_n;
  a.options.max_m = a.max_m;
  mc::SuiteReport report;
  if (a.suite == "props")
    report = mc::verify_props(a.options);
  else if (a.suite == "bounds")
    report = mc::verify_bounds(a.options);
  else
    report = mc::verify_reductions(a.options);
  mc::print_suite(std::cout, report);
  return report.passed() ? kOk : kViolation;
}

struct BoundArgs {
  std::string theorem;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::int64_t p = 0;
  int e = 0;
  mc::BoundOptions options;
};

int run_bound(const BoundArgs& a) {
  mc::BoundReport r;
  const std::string& t = a.theorem;
  if (t == "main")
    r = mc::main_bound(a.m, mc::build_context(a.n, a.k), {}, a.options);
  else if (t == "prime_corollary")
    r = mc::prime_corollary_bound(a.m, mc::build_context(a.n, a.k), {}, a.options);
  else if (t == "conjecture")
    r = mc::conjecture_bound(a.m, mc::build_context(a.n, a.k), {}, a.options);
  else if (t == "general_metacyclic")
    r = mc::general_metacyclic_bound(mc::GeneralPresentation(a.m, a.ell, a.n, a.k), a.options);
  else if (t == "prime_weight")
    r = mc::prime_weight_bound(a.p, a.k, a.options);
  else if (t == "prime_weight_refined")
    r = mc::prime_weight_refined_bound(a.p, a.k, a.options);
  else if (t == "prime_power_sandwich")
    r = mc::prime_power_sandwich(a.p, a.e, a.k, a.options);
  else if (t == "lift_bound")
    r = mc::lift_bound(a.p, a.e, a.k, a.options);
  else
    r = mc::deg_bound(mc::build_context(a.n, a.k), a.options);
  std::cout << mc::to_json(r) << '\n';
  return r.verdict == mc::Verdict::violated && t != "conjecture" ? kViolation : kOk;
}

struct SweepArgs {
  std::string theorem;
  std::int64_t max_n = 40;
  std::int64_t max_m = 40;
  std::int64_t max_order = 5000;
  unsigned jobs = 1;
  mc::BoundOptions options;
};

int run_sweep(const SweepArgs& a) {
  const bool hypotheses_only = a.theorem != "conjecture";
  const auto tuples = mc::group_tuples(a.max_n, a.max_m, a.max_order, a.max_m, hypotheses_only);
  const auto reports = mc::parallel_map<mc::BoundReport>(tuples.size(), a.jobs, [&](std::size_t i) {
    const auto& g = tuples[i];
    const auto ctx = mc::build_context(g.n, g.k);
    if (a.theorem == "main") return mc::main_bound(g.m, ctx, {}, a.options);
    if (a.theorem == "prime_corollary") return mc::prime_corollary_bound(g.m, ctx, {}, a.options);
    return mc::conjecture_bound(g.m, ctx, {}, a.options);
  });
  mc::write_sweep_csv(std::cout, reports);
  if (!hypotheses_only) return kOk;
  for (const auto& r : reports)
    if (r.verdict == mc::Verdict::violated) return kViolation;
  return kOk;
}

int run_cache(const std::string& action, const std::string& cache_path) {
  mc::WeightCache cache(cache_path.empty() ? mc::WeightCache::default_path() : std::filesystem::path(cache_path));
  if (action == "path") {
    std::cout << cache.path().string() << '\n';
  } else if (action == "clear") {
    cache.clear();
    std::cout << "cleared " << cache.path().string() << '\n';
  } else {
    for (const auto& r : cache.records()) std::cout << mc::to_json_line(r) << '\n';
    if (cache.ignored_lines() > 0) std::cerr << "ignored " << cache.ignored_lines() << " stale or malformed lines\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word norms, diameters and weight invariants of metacyclic groups"};
  app.set_version_flag("--version", std::string(mc::kToolVersion));
  app.set_config("--config", "", "TOML or INI file providing option defaults");
  app.require_subcommand(1);
  std::string cache_path;
  app.add_option("--cache", cache_path, "Weight cache file (default: $METACYCLIC_CACHE or ~/.cache/metacyclic)");

  WeightArgs wa;
  auto* weight = app.add_subcommand("weight", "wt(n,k;i), wt(n,k;r) or wt(n,k;alpha) by exact search");
  weight->add_option("--n", wa.n, "Modulus")->required();
  weight->add_option("--k", wa.k, "Unit modulo n")->required();
  auto* seq_opt = weight->add_option("--seq", wa.seq, "Exponent sequence, e.g. 3,1,0");
  auto* level_opt = weight->add_option("--level", wa.level, "Level r: minimise over reduced sequences of length r");
  auto* alpha_opt = weight->add_flag("--alpha", wa.alpha, "Weight of the full sequence (alpha-1, ..., 0)");
  seq_opt->excludes(level_opt)->excludes(alpha_opt);
  level_opt->excludes(alpha_opt);
  weight->add_flag("--no-cache", wa.no_cache, "Neither read nor write the weight cache");
  weight->add_flag("--timing", wa.timing, "Include elapsed seconds in the output");
  weight->add_option("--max-nodes", wa.max_nodes, "Search budget in set dilations (0 = unlimited)");

  DiameterArgs da;
  auto* diameter = app.add_subcommand("diameter", "Exact diameter by breadth-first search");
  diameter->add_option("--m", da.m, "Order of x (m0 when --ell is given)")->required();
  diameter->add_option("--n", da.n, "Order of y")->required();
  diameter->add_option("--k", da.k, "Unit modulo n")->required();
  diameter->add_option("--ell", da.ell, "Use the presentation x^m0 = y^ell instead of the split one");
  diameter->add_option("--norms", da.norms_path, "Write the word norm table as CSV");
  diameter->add_option("--max-elements", da.max_elements, "Largest group order to search");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Recompute a reference table as CSV");
  table->add_option("--which", ta.which, "Table to recompute")
      ->required()
      ->check(CLI::IsMember({"omega-example", "primes-1mod4", "primes-3mod4"}));
  table->add_flag("--check", ta.check, "Compare with the reference values; exit 2 on mismatch");
  table->add_option("--jobs", ta.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a property sweep; exit 2 on a counterexample");
  verify->add_option("--suite", va.suite, "Suite")->required()->check(CLI::IsMember({"props", "bounds", "reductions"}));
  verify->add_option("--max-n", va.max_n, "Largest n");
  verify->add_option("--max-m", va.max_m, "Largest m");
  verify->add_option("--max-order", va.options.max_order, "Largest m*n for group sweeps");
  verify->add_option("--max-alpha", va.options.max_alpha, "Largest ord(k) for props and reductions");
  verify->add_option("--samples", va.options.samples, "Random formal sums for the first reduction");
  verify->add_option("--seed", va.options.seed, "Random seed");
  verify->add_option("--family", va.options.family, "Bounds suite: run a single family");
  verify->add_option("--jobs", va.options.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Evaluate one bound as a JSON report");
  bound->add_option("--theorem", ba.theorem, "Bound to evaluate")
      ->required()
      ->check(CLI::IsMember({"main", "prime_corollary", "general_metacyclic", "prime_weight", "prime_weight_refined",
                             "prime_power_sandwich", "lift_bound", "deg_bound", "conjecture"}));
  bound->add_option("--m", ba.m, "Order of x (m0 for general_metacyclic)");
  bound->add_option("--n", ba.n, "Modulus");
  bound->add_option("--k", ba.k, "Unit");
  bound->add_option("--ell", ba.ell, "ell for general_metacyclic");
  bound->add_option("--p", ba.p, "Prime");
  bound->add_option("--e", ba.e, "Prime exponent");
  bound->add_option("--max-elements", ba.options.max_elements, "Largest group order for exact diameters");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a diameter bound over all groups in range as CSV");
  sweep->add_option("--theorem", sa.theorem, "Bound")
      ->required()
      ->check(CLI::IsMember({"main", "prime_corollary", "conjecture"}));
  sweep->add_option("--max-n", sa.max_n, "Largest n");
  sweep->add_option("--max-m", sa.max_m, "Largest m");
  sweep->add_option("--max-order", sa.max_order, "Largest m*n");
  sweep->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string cache_action = "list";
  auto* cache = app.add_subcommand("cache", "Inspect or clear the weight cache");
  cache->add_option("action", cache_action, "list, clear or path")->check(CLI::IsMember({"list", "clear", "path"}));

  auto* kernels = app.add_subcommand("kernels", "Print the selected bitset kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*weight) {
      if (wa.seq.empty() && wa.level == 0 && !wa.alpha) {
        std::cerr << "weight: one of --seq, --level or --alpha is required\n";
        return kUsage;
      }
      return run_weight(wa, cache_path);
    }
    if (*diameter) return run_diameter(da);
    if (*table) return run_table(ta);
    if (*verify) return run_verify(va);
    if (*bound) return run_bound(ba);
    if (*sweep) return run_sweep(sa);
    if (*cache) return run_cache(cache_action, cache_path);
    if (*kernels) {
      std::cout << mc::simd::active_kernels().name << '\n';
      return kOk;
    }
  } catch (const mc::Error& e) {
    switch (e.kind()) {
      case mc::ErrorKind::budget:
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
      case mc::ErrorKind::hypothesis:
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
      case mc::ErrorKind::validation:
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
