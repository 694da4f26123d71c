#include "metacyclic/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "metacyclic/error.hpp"
#include "metacyclic/parallel.hpp"

namespace metacyclic {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

std::string ctx_name(const UnitContext& ctx) {
  return "(n=" + std::to_string(ctx.n()) + ",k=" + std::to_string(ctx.k()) + ")";
}

std::string group_name(std::int64_t m, std::int64_t n, Residue k) {
  return "G(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::vector<Residue> units(std::int64_t n) {
  std::vector<Residue> out;
  for (Residue k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

std::vector<UnitContext> contexts(std::int64_t max_n, std::int64_t max_alpha, bool neg_one_only) {
  std::vector<UnitContext> out;
  for (std::int64_t n = 3; n <= max_n; ++n)
    for (Residue k : units(n)) {
      UnitContext ctx = build_context(n, k);
      if (ctx.alpha() > max_alpha || (neg_one_only && !ctx.neg_one())) continue;
      out.push_back(std::move(ctx));
    }
  return out;
}

ExponentSeq seq_of_mask(std::uint64_t mask, std::int64_t alpha) {
  std::vector<std::int64_t> e;
  for (std::int64_t j = alpha - 1; j >= 0; --j)
    if (mask >> j & 1u) e.push_back(j);
  return ExponentSeq(std::move(e), alpha);
}

std::uint64_t mask_of_seq(const ExponentSeq& seq) {
  std::uint64_t mask = 0;
  for (auto e : seq.entries()) mask |= std::uint64_t{1} << e;
  return mask;
}

std::string describe_report(const BoundReport& r) {
  std::string s = r.theorem_id + " " + r.subject + ": " + r.exact_name + " " +
                  (r.exact ? std::to_string(*r.exact) : std::string("?"));
  if (auto b = r.value("bound")) s += ", bound " + b->to_string();
  if (auto l = r.value("lower")) s += ", lower " + l->to_string();
  if (auto u = r.value("upper")) s += ", upper " + u->to_string();
  for (const auto& n : r.notes) s += "; " + n;
  return s;
}

void record_report(SuiteReport& suite, const std::string& check, const BoundReport& r, bool theorem = true) {
  suite.tally(check, theorem).check(r.verdict != Verdict::violated, [&] { return describe_report(r); });
}

template <class F>
SuiteReport run_parallel(const std::string& name, std::size_t count, unsigned jobs, F&& item) {
  const auto parts = parallel_map<SuiteReport>(count, jobs, std::function<SuiteReport(std::size_t)>(item));
  SuiteReport out;
  out.suite = name;
  for (const auto& p : parts) out.merge(p);
  return out;
}

bool wants(const SweepOptions& o, const std::string& family) { return o.family.empty() || o.family == family; }

// ----- props -----

SuiteReport props_for(const UnitContext& ctx) {
  SuiteReport r;
  const std::int64_t alpha = ctx.alpha();
  const std::uint32_t full = (1u << alpha) - 1;
  const std::string where = ctx_name(ctx);

  std::vector<std::int64_t> w(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) w[mask] = seq_weight(ctx, seq_of_mask(mask, alpha)).weight;

  auto& dual_t = r.tally("dual invariance");
  auto& codual_t = r.tally("codual invariance");
  auto& order_t = r.tally("order reversal");
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const ExponentSeq seq = seq_of_mask(mask, alpha);
    const ExponentSeq d = dual(seq);
    dual_t.check(w[mask] == w[mask_of_seq(d)], [&] {
      return where + " wt" + seq.to_string() + " = " + std::to_string(w[mask]) + " but wt" + d.to_string() + " = " +
             std::to_string(w[mask_of_seq(d)]);
    });
    if (seq.reduced()) {
      const ExponentSeq c = codual(seq);
      codual_t.check(w[mask] == w[mask_of_seq(c)], [&] {
        return where + " wt" + seq.to_string() + " = " + std::to_string(w[mask]) + " but wt" + c.to_string() +
               " = " + std::to_string(w[mask_of_seq(c)]);
      });
    }
    for (std::int64_t j = 0; j < alpha; ++j) {
      if (mask >> j & 1u) continue;
      const std::uint32_t finer = mask | 1u << j;
      order_t.check(w[finer] <= w[mask], [&] {
        return where + " wt" + seq_of_mask(finer, alpha).to_string() + " = " + std::to_string(w[finer]) + " > wt" +
               seq.to_string() + " = " + std::to_string(w[mask]);
      });
    }
  }

  r.tally("delta anchor").check(w[1] == ctx.n() / 2, [&] {
    return where + " wt(0) = " + std::to_string(w[1]);
  });

  const std::int64_t W = alpha_weight(ctx).weight;
  const std::int64_t min_all = *std::min_element(w.begin() + 1, w.end());
  r.tally("Delta anchor").check(W == w[full] && W == min_all, [&] {
    return where + " alpha_weight " + std::to_string(W) + ", wt(Delta) " + std::to_string(w[full]) +
           ", minimum over sequences " + std::to_string(min_all);
  });

  if (alpha <= 8) {
    auto& level_t = r.tally("level minima");
    std::int64_t min_level = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t len = 1; len <= alpha; ++len) {
      std::int64_t oracle = std::numeric_limits<std::int64_t>::max();
      for (std::uint32_t mask = 1; mask <= full; mask += 2)
        if (std::popcount(mask) == len) oracle = std::min(oracle, w[mask]);
      const auto lw = level_weight(ctx, len);
      min_level = std::min(min_level, lw.weight);
      level_t.check(lw.weight == oracle && w[mask_of_seq(lw.sequence)] == lw.weight, [&] {
        return where + " level " + std::to_string(len) + ": " + std::to_string(lw.weight) + " vs oracle " +
               std::to_string(oracle);
      });
    }
    r.tally("alpha_weight = min over levels").check(min_level == W, [&] {
      return where + " min level " + std::to_string(min_level) + " vs " + std::to_string(W);
    });
  }

  // Minimal prime sequences from the subset table: reduced masks realising W
  // with no reduced proper submask realising it.
  std::vector<char> realises(full + 1, 0);
  std::vector<char> below(full + 1, 0);
  std::set<std::uint64_t> oracle;
  std::int64_t oracle_deg = alpha;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    realises[mask] = w[mask] == W;
    for (std::int64_t j = 1; j < alpha; ++j) {
      if (!(mask >> j & 1u)) continue;
      const std::uint32_t sub = mask & ~(1u << j);
      if (realises[sub] || below[sub]) below[mask] = 1;
    }
    if (realises[mask] && !below[mask]) {
      oracle.insert(mask);
      oracle_deg = std::min<std::int64_t>(oracle_deg, std::bit_width(mask) - 1);
    }
  }
  const auto mps = minimal_prime_sequences(ctx);
  std::set<std::uint64_t> found;
  for (const auto& s : mps.sequences) found.insert(mask_of_seq(s));
  r.tally("minimal prime sequences").check(!mps.truncated && found == oracle && mps.deg_alpha == oracle_deg, [&] {
    return where + " found " + std::to_string(found.size()) + " sequences, oracle " + std::to_string(oracle.size()) +
           ", deg " + std::to_string(mps.deg_alpha) + " vs " + std::to_string(oracle_deg);
  });

  if (ctx.neg_one()) {
    r.tally("deg <= alpha/2").check(2 * mps.deg_alpha <= alpha, [&] {
      return where + " deg " + std::to_string(mps.deg_alpha) + ", alpha " + std::to_string(alpha);
    });
  }

  bool all_codegrees = !mps.sequences.empty();
  std::int64_t max_deg = 0, min_deg = alpha, max_codeg = 0, min_codeg = alpha;
  for (const auto& s : mps.sequences) {
    const auto c = s.codegree();
    if (!c) {
      all_codegrees = false;
      break;
    }
    max_deg = std::max(max_deg, s.degree());
    min_deg = std::min(min_deg, s.degree());
    max_codeg = std::max(max_codeg, *c);
    min_codeg = std::min(min_codeg, *c);
  }
  if (all_codegrees) {
    r.tally("degree/codegree symmetry").check(max_deg + min_codeg == alpha && min_deg + max_codeg == alpha, [&] {
      return where + " max deg " + std::to_string(max_deg) + " + min codeg " + std::to_string(min_codeg) +
             ", min deg " + std::to_string(min_deg) + " + max codeg " + std::to_string(max_codeg) + ", alpha " +
             std::to_string(alpha);
    });
  }
  return r;
}

// ----- bounds -----

SuiteReport split_bounds_for(const UnitContext& ctx, std::int64_t max_m, const SweepOptions& o) {
  SuiteReport r;
  const bool in_theorem = ctx.neg_one();
  const bool theorem_families = wants(o, "main") || wants(o, "prime_corollary") || wants(o, "bound_path");
  if (!wants(o, "conjecture") && !(in_theorem && theorem_families)) return r;

  const auto facts = alpha_weight(ctx, o.bound.limits);
  std::optional<MinimalPrimeResult> mps;
  if (in_theorem && theorem_families) {
    MinimalPrimeOptions opts = o.bound.prime_options;
    opts.limits = o.bound.limits;
    mps = minimal_prime_sequences(ctx, opts);
  }

  for (std::int64_t m = ctx.alpha(); m <= max_m && m * ctx.n() <= o.max_order; m += ctx.alpha()) {
    const SplitPresentation group(m, ctx.n(), ctx.k());
    const NormTable norms = all_norms(group, o.bound.max_elements);
    KnownValues known{facts.weight, std::nullopt, norms.diameter};
    if (mps && !mps->truncated) known.deg_alpha = mps->deg_alpha;

    if (wants(o, "conjecture")) record_report(r, "conjecture (no hypotheses)", conjecture_bound(m, ctx, known), false);
    if (!in_theorem || !mps) continue;

    const BoundReport main = main_bound(m, ctx, known, o.bound);
    if (wants(o, "main")) record_report(r, "main theorem", main);
    if (wants(o, "prime_corollary")) record_report(r, "prime corollary", prime_corollary_bound(m, ctx, known, o.bound));

    if (wants(o, "bound_path")) {
      const ExponentSeq* seq = nullptr;
      for (const auto& s : mps->sequences)
        if (s.degree() == mps->deg_alpha) {
          seq = &s;
          break;
        }
      const std::int64_t main_value = main.value("bound")->num;
      auto& t = r.tally("bound path");
      for (std::size_t i = 0; i < group.size(); ++i) {
        const GroupElement g = group.element(i);
        const BoundPath bp = construct_bound_path(group, g, *seq, facts.weight);
        const PathEval ev = eval_path(group, bp.path);
        const bool ok = ev.element == g && ev.length >= norms.norms[i] && ev.length <= bp.length_bound &&
                        ev.length <= main_value;
        t.check(ok, [&] {
          return group_name(m, ctx.n(), ctx.k()) + " x^" + std::to_string(g.a) + " y^" + std::to_string(g.b) +
                 ": case " + std::to_string(bp.case_number) + " length " + std::to_string(ev.length) + ", norm " +
                 std::to_string(norms.norms[i]) + ", case bound " + std::to_string(bp.length_bound) +
                 ", main bound " + std::to_string(main_value);
        });
      }
    }
  }
  return r;
}

SuiteReport general_bounds_for(std::int64_t n, std::int64_t max_m, const SweepOptions& o) {
  SuiteReport r;
  for (std::int64_t ell = 1; ell <= n; ++ell) {
    if (n % ell != 0) continue;
    for (Residue k : units(n)) {
      if (ell * (k - 1) % n != 0) continue;
      const std::int64_t alpha = unit_order(n, k);
      for (std::int64_t m0 = alpha; m0 <= max_m && m0 * n <= o.max_general_order; m0 += alpha) {
        const GeneralPresentation group(m0, ell, n, k);
        const BoundReport rep = general_metacyclic_bound(group, o.bound);
        const auto cover = rep.value("cover_diameter");
        r.tally("general quotient <= cover").check(rep.exact && cover && Rational(*rep.exact) <= *cover, [&] {
          return describe_report(rep);
        });
        record_report(r, "general metacyclic", rep);
      }
    }
  }
  return r;
}

// ----- reductions -----

SuiteReport primal_samples(const SweepOptions& o) {
  SuiteReport r;
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::map<std::pair<std::int64_t, Residue>, UnitContext> ctxs;
  std::map<std::tuple<std::int64_t, Residue, std::uint64_t>, std::int64_t> weights;
  auto& value_t = r.tally("primal value preserved");
  auto& acs_t = r.tally("primal acs non-increasing");
  auto& form_t = r.tally("primal form");
  auto& bound_t = r.tally("primal acs <= wt(support)");
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const std::int64_t n = uniform(3, 40);
    const auto us = units(n);
    const Residue k = us[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(us.size()) - 1))];
    auto it = ctxs.find({n, k});
    if (it == ctxs.end()) it = ctxs.emplace(std::pair{n, k}, build_context(n, k)).first;
    const UnitContext& ctx = it->second;

    FormalSum sum;
    const std::int64_t terms = uniform(0, 8);
    for (std::int64_t t = 0; t < terms; ++t) sum.terms.push_back({uniform(-n, n), uniform(0, 3 * ctx.alpha())});
    const FormalSum out = primal_reduce(ctx, sum);

    auto describe = [&] {
      std::string d = ctx_name(ctx) + " sum";
      for (const auto& t : sum.terms) d += " " + std::to_string(t.coefficient) + "k^" + std::to_string(t.exponent);
      return d;
    };
    value_t.check(out.value(ctx) == sum.value(ctx), describe);
    acs_t.check(out.acs() <= sum.acs(), describe);
    form_t.check(out.is_primal(ctx.alpha()), describe);

    std::map<std::int64_t, std::int64_t> collapsed;
    for (const auto& t : sum.terms) collapsed[mod(t.exponent, ctx.alpha())] += t.coefficient;
    std::uint64_t support = 0;
    for (const auto& [cls, c] : collapsed)
      if (c != 0) support |= std::uint64_t{1} << cls;
    if (support == 0) {
      bound_t.check(out.acs() == 0, describe);
      continue;
    }
    auto wit = weights.find({n, k, support});
    if (wit == weights.end())
      wit = weights.emplace(std::tuple{n, k, support}, seq_weight(ctx, seq_of_mask(support, ctx.alpha())).weight).first;
    bound_t.check(out.acs() <= wit->second, describe);
  }
  return r;
}

}  // namespace

void CheckTally::record(bool ok, const std::string& counterexample) {
  ++checked;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(counterexample);
}

CheckTally& SuiteReport::tally(const std::string& name, bool theorem) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back({name, theorem, 0, 0, {}});
  return checks.back();
}

const CheckTally* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& c : other.checks) {
    auto& mine = tally(c.name, c.theorem);
    mine.checked += c.checked;
    mine.failed += c.failed;
    for (const auto& ce : c.counterexamples)
      if (mine.counterexamples.size() < kMaxCounterexamples) mine.counterexamples.push_back(ce);
  }
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (c.theorem && c.failed > 0) return false;
  return true;
}

void print_suite(std::ostream& out, const SuiteReport& report) {
  out << "suite " << report.suite << '\n';
  for (const auto& c : report.checks) {
    out << "  " << (c.failed == 0 ? "ok  " : (c.theorem ? "FAIL" : "note")) << ' ' << c.name << ": checked "
        << c.checked << ", failed " << c.failed << '\n';
    for (const auto& ce : c.counterexamples) out << "       " << ce << '\n';
  }
  out << (report.passed() ? "passed" : "FAILED") << '\n';
}

std::vector<GroupTuple> group_tuples(std::int64_t max_n, std::int64_t max_m, std::int64_t max_order,
                                     std::int64_t max_alpha, bool neg_one_only) {
  std::vector<GroupTuple> out;
  for (std::int64_t n = 3; n <= max_n && 1 * n <= max_order; ++n)
    for (Residue k : units(n)) {
      const UnitContext ctx = build_context(n, k);
      if (ctx.alpha() > max_alpha || (neg_one_only && !ctx.neg_one())) continue;
      for (std::int64_t m = ctx.alpha(); m <= max_m && m * n <= max_order; m += ctx.alpha()) out.push_back({m, n, k});
    }
  return out;
}

SuiteReport verify_props(const SweepOptions& o) {
  const auto ctxs = contexts(o.max_n.value_or(40), std::min<std::int64_t>(o.max_alpha, 20), false);
  return run_parallel("props", ctxs.size(), o.jobs, [&](std::size_t i) { return props_for(ctxs[i]); });
}

SuiteReport verify_bounds(const SweepOptions& o) {
  static const std::set<std::string> kFamilies = {"main",         "prime_corollary",      "bound_path", "general",
                                                  "prime_weight", "prime_weight_refined", "sandwich",   "lift",
                                                  "deg",          "conjecture"};
  if (!o.family.empty() && !kFamilies.count(o.family)) fail(ErrorKind::validation, "unknown bounds family: " + o.family);
  const std::int64_t max_n = o.max_n.value_or(40);
  const std::int64_t max_m = o.max_m.value_or(40);

  SuiteReport out;
  out.suite = "bounds";
  const auto ctxs = contexts(max_n, max_m, false);
  out.merge(run_parallel("bounds", ctxs.size(), o.jobs,
                         [&](std::size_t i) { return split_bounds_for(ctxs[i], max_m, o); }));

  if (wants(o, "general")) {
    out.merge(run_parallel("bounds", static_cast<std::size_t>(std::max<std::int64_t>(0, max_n - 2)), o.jobs,
                           [&](std::size_t i) { return general_bounds_for(static_cast<std::int64_t>(i) + 3, max_m, o); }));
  }

  if (wants(o, "prime_weight") || wants(o, "prime_weight_refined")) {
    std::vector<std::pair<std::int64_t, Residue>> prim;
    for (std::int64_t p = 3; p <= o.max_prime; ++p)
      if (is_prime(p))
        for (Residue k : units(p))
          if (unit_order(p, k) == p - 1) prim.push_back({p, k});
    out.merge(run_parallel("bounds", prim.size(), o.jobs, [&](std::size_t i) {
      SuiteReport r;
      const auto [p, k] = prim[i];
      if (wants(o, "prime_weight")) record_report(r, "prime weight bound", prime_weight_bound(p, k, o.bound));
      if (wants(o, "prime_weight_refined")) {
        const BoundReport ref = prime_weight_refined_bound(p, k, o.bound);
        if (ref.hypotheses_hold()) {
          record_report(r, "prime weight refined bound", ref);
          r.tally("refined <= basic").check(*ref.value("bound") <= *ref.value("basic_bound"),
                                            [&] { return describe_report(ref); });
        }
      }
      return r;
    }));
  }

  if (wants(o, "sandwich")) {
    const std::pair<std::int64_t, int> cases[] = {{3, 2}, {3, 3}, {5, 2}, {2, 4}, {2, 5}};
    for (const auto& [p, e] : cases) {
      const std::int64_t n = checked_pow(p, e);
      for (Residue k : units(n)) {
        const BoundReport rep = prime_power_sandwich(p, e, k, o.bound);
        if (!rep.hypotheses_hold()) continue;
        out.tally("sandwich lower <= upper").check(*rep.value("lower") <= *rep.value("upper"),
                                                   [&] { return describe_report(rep); });
        record_report(out, "prime power sandwich", rep);
      }
    }
  }

  if (wants(o, "lift")) {
    const std::pair<std::int64_t, int> cases[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
    for (const auto& [p, e] : cases)
      for (Residue k : units(checked_pow(p, e))) record_report(out, "lift bound", lift_bound(p, e, k, o.bound));
  }

  if (wants(o, "deg")) {
    for (const auto& ctx : contexts(max_n, max_m, true)) record_report(out, "deg bound", deg_bound(ctx, o.bound));
  }
  return out;
}

SuiteReport verify_reductions(const SweepOptions& o) {
  SuiteReport out = primal_samples(o);
  out.suite = "reductions";
  const auto groups = group_tuples(o.max_n.value_or(o.max_order), o.max_m.value_or(o.max_order), o.max_order,
                                   o.max_alpha, false);
  out.merge(run_parallel("reductions", groups.size(), o.jobs, [&](std::size_t i) {
    SuiteReport r;
    const auto [m, n, k] = groups[i];
    const SplitPresentation group(m, n, k);
    const NormTable norms = all_norms(group, o.bound.max_elements);
    const auto bounded = syllable_bounded_norms(group, group.context().alpha(), o.bound.max_elements);
    std::size_t first_bad = norms.norms.size();
    for (std::size_t j = 0; j < norms.norms.size() && first_bad == norms.norms.size(); ++j)
      if (bounded[j] != norms.norms[j]) first_bad = j;
    r.tally("syllable <= ord(k) oracle").check(first_bad == norms.norms.size(), [&] {
      const GroupElement g = group.element(first_bad);
      return group_name(m, n, k) + " x^" + std::to_string(g.a) + " y^" + std::to_string(g.b) + ": BFS " +
             std::to_string(norms.norms[first_bad]) + ", syllable-bounded " + std::to_string(bounded[first_bad]);
    });
    return r;
  }));
  return out;
}

}  // namespace metacyclic
