#include "metacyclic/bounds.hpp"

#include <json.hpp>
#include <numeric>
#include <ostream>

#include "metacyclic/error.hpp"
#include "metacyclic/version.hpp"

namespace metacyclic {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorKind::validation, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return a.num * b.den <=> b.num * a.den; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::exact_unavailable: return "exact-unavailable";
  }
  return "unknown";
}

bool BoundReport::hypotheses_hold() const {
  for (const auto& h : hypotheses)
    if (!h.satisfied) return false;
  return true;
}

std::optional<Rational> BoundReport::value(std::string_view name) const {
  for (const auto& v : values)
    if (v.name == name) return v.value;
  return std::nullopt;
}

std::string to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["subject"] = report.subject;
  j["theorem_id"] = report.theorem_id;
  auto& hyps = j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& h : report.hypotheses) hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}});
  auto& vals = j["values"] = nlohmann::ordered_json::object();
  for (const auto& v : report.values) {
    if (v.value.is_integer())
      vals[v.name] = v.value.num;
    else
      vals[v.name] = v.value.to_string();
  }
  if (report.exact)
    j["exact"] = {{"name", report.exact_name}, {"value", *report.exact}};
  else
    j["exact"] = nullptr;
  j["verdict"] = std::string(to_string(report.verdict));
  j["notes"] = report.notes;
  return j.dump();
}

void write_sweep_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "subject,theorem_id,hypotheses,bound,lower,upper,exact,verdict\n";
  auto cell = [](const std::optional<Rational>& v) { return v ? v->to_string() : std::string(); };
  for (const auto& r : reports) {
    out << '"' << r.subject << "\"," << r.theorem_id << ',' << (r.hypotheses_hold() ? "met" : "unmet") << ','
        << cell(r.value("bound")) << ',' << cell(r.value("lower")) << ',' << cell(r.value("upper")) << ','
        << (r.exact ? std::to_string(*r.exact) : std::string()) << ',' << to_string(r.verdict) << '\n';
  }
}

namespace {

std::string group_subject(std::int64_t m, std::int64_t n, Residue k) {
  return "G(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::string unit_subject(std::int64_t p, int e, Residue k) {
  return "(p=" + std::to_string(p) + ",e=" + std::to_string(e) + ",k=" + std::to_string(k) + ")";
}

// wt(n, k; ord k), including the degenerate moduli 1 and 2 reached by the quotient map.
std::int64_t weight_of(std::int64_t n, Residue k, const SearchLimits& limits) {
  if (n < 3) return n / 2;
  return alpha_weight(build_context(n, k), limits).weight;
}

std::int64_t deg_of(const UnitContext& ctx, const KnownValues& known, const BoundOptions& options) {
  if (known.deg_alpha) return *known.deg_alpha;
  MinimalPrimeOptions opts = options.prime_options;
  opts.limits = options.limits;
  const auto result = minimal_prime_sequences(ctx, opts);
  if (result.truncated)
    fail(ErrorKind::budget, "minimal prime search truncated at length " + std::to_string(opts.max_length));
  return result.deg_alpha;
}

std::optional<std::int64_t> diameter_of(std::int64_t m, const UnitContext& ctx, const KnownValues& known,
                                        const BoundOptions& options) {
  if (known.diameter) return known.diameter;
  if (m % ctx.alpha() != 0) return std::nullopt;
  if (static_cast<std::size_t>(m * ctx.n()) > options.max_elements) return std::nullopt;
  return all_norms(SplitPresentation(m, ctx.n(), ctx.k()), options.max_elements).diameter;
}

void main_hypotheses(BoundReport& r, const UnitContext& ctx) {
  r.hypotheses.push_back({"alpha even", ctx.alpha() % 2 == 0});
  r.hypotheses.push_back({"k^(alpha/2) == -1 (mod n)", ctx.neg_one()});
}

// Verdict for an upper bound on an exact value.
void settle_upper(BoundReport& r, const Rational& bound) {
  if (!r.exact) {
    r.verdict = r.hypotheses_hold() ? Verdict::exact_unavailable : Verdict::not_applicable;
    return;
  }
  const bool within = Rational(*r.exact) <= bound;
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::not_applicable;
    r.notes.push_back(within ? "bound holds outside the hypotheses" : "bound fails outside the hypotheses");
    return;
  }
  r.verdict = within ? Verdict::holds : Verdict::violated;
}

void settle_interval(BoundReport& r, const Rational& lower, const Rational& upper) {
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::not_applicable;
    return;
  }
  if (!r.exact) {
    r.verdict = Verdict::exact_unavailable;
    return;
  }
  const Rational x(*r.exact);
  if (x < lower) r.notes.push_back("exact value below the lower bound");
  if (x > upper) r.notes.push_back("exact value above the upper bound");
  r.verdict = lower <= x && x <= upper ? Verdict::holds : Verdict::violated;
}

void require_split(BoundReport& r, std::int64_t m, const UnitContext& ctx) {
  r.hypotheses.push_back({"k^m == 1 (mod n)", m >= 1 && m % ctx.alpha() == 0});
}

}  // namespace

BoundReport main_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known,
                       const BoundOptions& options) {
  BoundReport r;
  r.subject = group_subject(m, ctx.n(), ctx.k());
  r.theorem_id = "main";
  r.exact_name = "diameter";
  require_split(r, m, ctx);
  main_hypotheses(r, ctx);
  const std::int64_t wt = known.weight ? *known.weight : alpha_weight(ctx, options.limits).weight;
  std::int64_t bound = m / 2 + wt;
  r.values.push_back({"half_m", m / 2});
  r.values.push_back({"weight", wt});
  if (ctx.alpha() == m) {
    const std::int64_t deg = deg_of(ctx, known, options);
    r.values.push_back({"deg_alpha", deg});
    bound += deg;
  }
  r.values.push_back({"bound", bound});
  r.exact = diameter_of(m, ctx, known, options);
  settle_upper(r, bound);
  return r;
}

BoundReport prime_corollary_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known,
                                  const BoundOptions& options) {
  BoundReport r;
  r.subject = group_subject(m, ctx.n(), ctx.k());
  r.theorem_id = "prime_corollary";
  r.exact_name = "diameter";
  require_split(r, m, ctx);
  main_hypotheses(r, ctx);
  const std::int64_t wt = known.weight ? *known.weight : alpha_weight(ctx, options.limits).weight;
  const std::int64_t deg = deg_of(ctx, known, options);
  r.hypotheses.push_back({"2 deg(n,k;alpha) <= [alpha/2]", 2 * deg <= ctx.alpha() / 2});
  r.values.push_back({"half_m", m / 2});
  r.values.push_back({"weight", wt});
  r.values.push_back({"deg_alpha", deg});
  r.values.push_back({"bound", m / 2 + wt});
  r.exact = diameter_of(m, ctx, known, options);
  settle_upper(r, m / 2 + wt);
  return r;
}

BoundReport general_metacyclic_bound(const GeneralPresentation& group, const BoundOptions& options) {
  const SplitPresentation cover = group.cover();
  BoundReport r = main_bound(cover.m(), cover.context(), {}, options);
  r.subject = "G(" + std::to_string(group.m0()) + "," + std::to_string(group.ell()) + "," +
              std::to_string(group.n()) + "," + std::to_string(group.k()) + ")";
  r.theorem_id = "general_metacyclic";
  r.notes.clear();
  r.values.push_back({"cover_m", cover.m()});
  if (r.exact) r.values.push_back({"cover_diameter", *r.exact});
  r.exact.reset();
  if (group.size() <= options.max_elements) r.exact = all_norms(group, options.max_elements).diameter;
  if (r.exact && r.value("cover_diameter") && Rational(*r.exact) > *r.value("cover_diameter"))
    r.notes.push_back("quotient diameter exceeds cover diameter");
  settle_upper(r, *r.value("bound"));
  return r;
}

namespace {

struct PrimeSetup {
  UnitContext ctx;
  std::int64_t i1;  // degree of the consecutive sequence from the theorem
  bool two_in_a;    // 2 in A or -A
};

PrimeSetup prime_setup(std::int64_t p, Residue k) {
  if (p < 3 || !is_prime(p)) fail(ErrorKind::validation, "p must be an odd prime: p = " + std::to_string(p));
  UnitContext ctx = build_context(p, k);
  if (ctx.alpha() != p - 1)
    fail(ErrorKind::validation, "k is not a primitive root modulo " + std::to_string(p) + ": ord(k) = " +
                                    std::to_string(ctx.alpha()));
  const std::int64_t i1 = p % 4 == 1 ? (p - 5) / 4 : (p - 3) / 4;
  bool two = false;
  for (std::int64_t j = 0; j <= i1; ++j) {
    const Residue u = ctx.power(j);
    if (u == 2 % p || mod(-u, p) == 2 % p) two = true;
  }
  return {std::move(ctx), i1, two};
}

ExponentSeq consecutive(std::int64_t degree, std::int64_t alpha) {
  std::vector<std::int64_t> e;
  for (std::int64_t j = degree; j >= 0; --j) e.push_back(j);
  return ExponentSeq(std::move(e), alpha);
}

}  // namespace

BoundReport prime_weight_bound(std::int64_t p, Residue k, const BoundOptions& options) {
  const PrimeSetup s = prime_setup(p, k);
  BoundReport r;
  r.subject = "(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")";
  r.theorem_id = "prime_weight";
  r.exact_name = "weight";
  r.hypotheses.push_back({"p odd prime", true});
  r.hypotheses.push_back({"ord(k) = p-1", true});
  const Rational bound = p % 4 == 1 ? Rational(p + 3, 4) : Rational(p + 5, 4);
  r.values.push_back({"bound", bound});
  r.values.push_back({"theorem_degree", s.i1});
  const auto claimed = seq_weight(s.ctx, consecutive(s.i1, p - 1), options.limits);
  r.values.push_back({"theorem_degree_weight", claimed.weight});
  r.exact = alpha_weight(s.ctx, options.limits).weight;
  if (Rational(claimed.weight) > bound) r.notes.push_back("consecutive sequence of the stated degree exceeds the bound");
  settle_upper(r, bound);
  if (r.verdict == Verdict::holds && Rational(claimed.weight) > bound) r.verdict = Verdict::violated;
  return r;
}

BoundReport prime_weight_refined_bound(std::int64_t p, Residue k, const BoundOptions& options) {
  const PrimeSetup s = prime_setup(p, k);
  BoundReport r;
  r.subject = "(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")";
  r.theorem_id = "prime_weight_refined";
  r.exact_name = "weight";
  r.hypotheses.push_back({"2 in A or -A", s.two_in_a});
  const Rational bound = p % 4 == 1 ? Rational(p - 1, 4) : Rational(p + 1, 4);
  const Rational basic = p % 4 == 1 ? Rational(p + 3, 4) : Rational(p + 5, 4);
  r.values.push_back({"bound", bound});
  r.values.push_back({"basic_bound", basic});
  r.values.push_back({"theorem_degree", s.i1});
  const auto claimed = seq_weight(s.ctx, consecutive(s.i1, p - 1), options.limits);
  r.values.push_back({"theorem_degree_weight", claimed.weight});
  r.exact = alpha_weight(s.ctx, options.limits).weight;
  settle_upper(r, bound);
  if (r.verdict == Verdict::holds && Rational(claimed.weight) > bound) {
    r.notes.push_back("consecutive sequence of the stated degree exceeds the refined bound");
    r.verdict = Verdict::violated;
  }
  return r;
}

int epsilon(std::int64_t p) { return p % 4 == 1 ? 1 : -1; }

int gamma(Residue k, int e) {
  const std::int64_t n = checked_pow(2, e);
  return pow_mod(k, std::int64_t{1} << (e - 3), n) == n - 1 ? 4 : 2;
}

BoundReport prime_power_sandwich(std::int64_t p, int e, Residue k, const BoundOptions& options) {
  BoundReport r;
  r.subject = unit_subject(p, e, k);
  r.theorem_id = "prime_power_sandwich";
  r.exact_name = "weight";
  if (!is_prime(p)) fail(ErrorKind::validation, "not a prime: p = " + std::to_string(p));
  const std::int64_t n = checked_pow(p, e);
  const UnitContext ctx = build_context(n, k);
  Rational lower;
  Rational upper;
  if (p == 2) {
    r.hypotheses.push_back({"e >= 4", e >= 4});
    const bool order_ok = e >= 4 && ctx.alpha() == (std::int64_t{1} << (e - 2));
    r.hypotheses.push_back({"ord(k) = 2^(e-2)", order_ok});
    if (!r.hypotheses_hold()) {
      r.verdict = Verdict::not_applicable;
      return r;
    }
    const int g = gamma(k, e);
    r.values.push_back({"gamma", g});
    lower = Rational(g + 2 * (e - 2));
    upper = Rational(g + 2 * (e - 1));
  } else {
    const bool order_ok = ctx.alpha() == n / p * (p - 1);
    r.hypotheses.push_back({"ord(k) = p^(e-1)(p-1)", order_ok});
    if (!order_ok) {
      r.verdict = Verdict::not_applicable;
      return r;
    }
    const int eps = epsilon(p);
    r.values.push_back({"epsilon", eps});
    const Rational base(p + 4 + eps, 4);
    lower = base + Rational((e - 2) * p);
    upper = base + Rational((e - 1) * p);
  }
  r.values.push_back({"lower", lower});
  r.values.push_back({"upper", upper});
  r.exact = alpha_weight(ctx, options.limits).weight;
  settle_interval(r, lower, upper);
  return r;
}

BoundReport lift_bound(std::int64_t p, int e, Residue k, const BoundOptions& options) {
  const QuotientUnit q = quotient_unit(p, e, k);
  const std::int64_t n = checked_pow(p, e);
  const UnitContext ctx = build_context(n, k);
  BoundReport r;
  r.subject = unit_subject(p, e, k);
  r.theorem_id = "lift_bound";
  r.exact_name = "weight";
  const std::int64_t m = ctx.alpha();
  const bool p_divides = m % p == 0;
  r.hypotheses.push_back({"e >= 2", true});
  r.values.push_back({"k0", q.unit});
  r.values.push_back({"m0", q.order});
  const std::int64_t base = weight_of(q.modulus, q.unit, options.limits);
  const std::int64_t upper = base + (p_divides ? p : m / 2);
  r.values.push_back({"lower", base});
  r.values.push_back({"upper", upper});
  r.notes.push_back(p_divides ? "p divides ord(k)" : "p does not divide ord(k)");
  r.exact = alpha_weight(ctx, options.limits).weight;
  settle_interval(r, base, upper);
  return r;
}

BoundReport deg_bound(const UnitContext& ctx, const BoundOptions& options) {
  BoundReport r;
  r.subject = "(n=" + std::to_string(ctx.n()) + ",k=" + std::to_string(ctx.k()) + ")";
  r.theorem_id = "deg_bound";
  r.exact_name = "degree";
  main_hypotheses(r, ctx);
  r.hypotheses.push_back({"alpha > 1", ctx.alpha() > 1});
  const Rational bound(ctx.alpha(), 2);
  r.values.push_back({"bound", bound});
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  MinimalPrimeOptions opts = options.prime_options;
  opts.limits = options.limits;
  const auto result = minimal_prime_sequences(ctx, opts);
  if (!result.truncated) r.exact = result.deg_alpha;
  settle_upper(r, bound);
  return r;
}

BoundReport conjecture_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known,
                             const BoundOptions& options) {
  BoundReport r;
  r.subject = group_subject(m, ctx.n(), ctx.k());
  r.theorem_id = "conjecture";
  r.exact_name = "diameter";
  require_split(r, m, ctx);
  const std::int64_t wt = known.weight ? *known.weight : alpha_weight(ctx, options.limits).weight;
  r.values.push_back({"bound", m / 2 + wt});
  r.exact = diameter_of(m, ctx, known, options);
  settle_upper(r, m / 2 + wt);
  return r;
}

}  // namespace metacyclic
