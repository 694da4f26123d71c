#include "metacyclic/omega.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <queue>

#include "metacyclic/error.hpp"

namespace metacyclic {

// ---------------------------------------------------------------------------
// ExponentSeq / BudgetSeq

ExponentSeq::ExponentSeq(std::vector<std::int64_t> entries, std::int64_t alpha)
    : entries_(std::move(entries)), alpha_(alpha) {
  if (alpha_ < 1) fail(ErrorKind::validation, "exponent sequence needs alpha >= 1");
  if (entries_.empty()) fail(ErrorKind::validation, "exponent sequence is empty");
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 0 || entries_[j] >= alpha_)
      fail(ErrorKind::validation, "exponent " + std::to_string(entries_[j]) + " outside [0, " +
                                      std::to_string(alpha_ - 1) + "]");
    if (j > 0 && entries_[j] >= entries_[j - 1])
      fail(ErrorKind::validation, "exponent sequence is not strictly decreasing: " + to_string());
  }
}

ExponentSeq ExponentSeq::full(std::int64_t alpha) {
  std::vector<std::int64_t> e;
  for (std::int64_t x = alpha - 1; x >= 0; --x) e.push_back(x);
  return ExponentSeq(std::move(e), alpha);
}

ExponentSeq ExponentSeq::delta(std::int64_t alpha) { return ExponentSeq({0}, alpha); }

ExponentSeq ExponentSeq::parse(std::string_view text, std::int64_t alpha) {
  std::vector<std::int64_t> e;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      fail(ErrorKind::validation, "malformed sequence: \"" + std::string(text) + "\"");
    e.push_back(v);
    pos = comma + 1;
  }
  return ExponentSeq(std::move(e), alpha);
}

std::optional<std::int64_t> ExponentSeq::codegree() const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (*it != 0) return *it;
  return std::nullopt;
}

bool ExponentSeq::contains(std::int64_t e) const {
  return std::find(entries_.begin(), entries_.end(), e) != entries_.end();
}

namespace {

std::string join(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(values[j]);
  }
  return out;
}

}  // namespace

std::string ExponentSeq::to_string() const { return join(entries_); }

std::int64_t BudgetSeq::weight() const {
  std::int64_t w = 0;
  for (const auto b : bounds) w += b;
  return w;
}

std::string BudgetSeq::to_string() const { return join(bounds); }

// ---------------------------------------------------------------------------
// Coverage

OmegaSet omega_coverage(const UnitContext& ctx, const ExponentSeq& seq, const BudgetSeq& budget) {
  if (seq.size() != budget.bounds.size())
    fail(ErrorKind::validation, "sequence and budget lengths differ (" + std::to_string(seq.size()) + " vs " +
                                    std::to_string(budget.bounds.size()) + ")");
  if (seq.alpha() != ctx.alpha()) fail(ErrorKind::validation, "sequence alpha does not match the unit's order");
  OmegaSet s = OmegaSet::zero(ctx.n());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (budget.bounds[j] < 0) fail(ErrorKind::validation, "negative budget");
    const Residue step = ctx.power(seq[j]);
    // Past floor(n/2) further dilation adds nothing.
    const std::int64_t reps = std::min(budget.bounds[j], ctx.n() / 2);
    for (std::int64_t b = 0; b < reps; ++b) s = s.dilated(step);
  }
  return s;
}

namespace {

// Upper bound on prod_t (2 lambda_t + 1) over parts >= 1 budgets summing to w,
// saturated at cap. Balanced budgets maximise the product.
std::int64_t max_box_size(std::int64_t w, std::int64_t parts, std::int64_t cap) {
  if (parts <= 0) return 1;
  const std::int64_t q = w / parts;
  const std::int64_t rem = w % parts;
  std::int64_t prod = 1;
  for (std::int64_t t = 0; t < rem && prod < cap; ++t) prod *= 2 * q + 3;
  if (q > 0)
    for (std::int64_t t = rem; t < parts && prod < cap; ++t) prod *= 2 * q + 1;
  return std::min(prod, cap);
}

std::int64_t weight_lower_bound(std::int64_t n, std::int64_t parts) {
  std::int64_t w = 0;
  while (max_box_size(w, parts, n) < n) ++w;
  return w;
}

/// Depth-first search over budgets with a fixed total, positions filled left
/// to right with ascending budgets, so the first hit is the lexicographically
/// smallest covering budget.
class CoverageSearch {
 public:
  CoverageSearch(const UnitContext& ctx, const ExponentSeq& seq, const SearchLimits& limits)
      : n_(ctx.n()), limits_(limits), budget_(seq.size(), 0) {
    for (const auto e : seq.entries()) steps_.push_back(static_cast<std::size_t>(ctx.power(e)));
    const std::size_t words = simd::words_for(static_cast<std::size_t>(n_));
    levels_.assign(seq.size() + 1, std::vector<simd::Word>(words, 0));
    scratch_.assign(seq.size() + 1, std::vector<simd::Word>(words, 0));
    levels_[0][0] = 1;
  }

  std::optional<BudgetSeq> find_within(std::int64_t bound) {
    std::fill(budget_.begin(), budget_.end(), 0);
    if (descend(0, bound)) return BudgetSeq{budget_};
    return std::nullopt;
  }

 private:
  bool descend(std::size_t j, std::int64_t remaining) {
    const auto& kernels = simd::active_kernels();
    const std::size_t count = kernels.popcount(levels_[j]);
    if (count == static_cast<std::size_t>(n_)) {
      std::fill(budget_.begin() + static_cast<std::ptrdiff_t>(j), budget_.end(), 0);
      return true;
    }
    const std::size_t r = steps_.size();
    if (j == r) return false;
    const auto parts = static_cast<std::int64_t>(r - j);
    if (static_cast<std::int64_t>(count) * max_box_size(remaining, parts, n_) < n_) return false;

    levels_[j + 1] = levels_[j];
    for (std::int64_t lambda = 0; lambda <= remaining; ++lambda) {
      if (lambda > 0) {
        if (limits_.max_nodes != 0 && ++nodes_ > limits_.max_nodes)
          fail(ErrorKind::budget, "weight search budget exceeded (" + std::to_string(limits_.max_nodes) +
                                      " nodes) for n = " + std::to_string(n_));
        kernels.dilate(scratch_[j + 1], levels_[j + 1], static_cast<std::size_t>(n_), steps_[j] % n_);
        if (scratch_[j + 1] == levels_[j + 1]) break;  // saturated: larger budgets add nothing
        std::swap(scratch_[j + 1], levels_[j + 1]);
      }
      budget_[j] = lambda;
      if (descend(j + 1, remaining - lambda)) return true;
    }
    budget_[j] = 0;
    return false;
  }

  std::int64_t n_;
  SearchLimits limits_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> steps_;
  std::vector<std::int64_t> budget_;
  std::vector<std::vector<simd::Word>> levels_;
  std::vector<std::vector<simd::Word>> scratch_;
};

void check_alpha(const UnitContext& ctx, const ExponentSeq& seq) {
  if (seq.alpha() != ctx.alpha())
    fail(ErrorKind::validation, "sequence alpha " + std::to_string(seq.alpha()) + " does not match ord(k) = " +
                                    std::to_string(ctx.alpha()));
}

// Reduced sequences of length r in lexicographic order of their entries.
std::vector<ExponentSeq> reduced_sequences(std::int64_t alpha, std::int64_t r) {
  constexpr std::size_t kMaxSequences = 20'000'000;
  const auto choose = static_cast<std::size_t>(r - 1);
  std::vector<ExponentSeq> out;
  // Increasing combination drawn from {1, ..., alpha-1}.
  std::vector<std::int64_t> pick(choose);
  for (std::size_t s = 0; s < choose; ++s) pick[s] = static_cast<std::int64_t>(s) + 1;
  while (true) {
    if (out.size() >= kMaxSequences)
      fail(ErrorKind::budget, "too many reduced sequences of length " + std::to_string(r));
    std::vector<std::int64_t> e(pick.rbegin(), pick.rend());
    e.push_back(0);
    out.emplace_back(std::move(e), alpha);
    std::size_t s = choose;
    while (s > 0 && pick[s - 1] == alpha - 1 - static_cast<std::int64_t>(choose - s)) --s;
    if (s == 0) break;
    ++pick[s - 1];
    for (std::size_t t = s; t < choose; ++t) pick[t] = pick[t - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<BudgetSeq> covering_budget_within(const UnitContext& ctx, const ExponentSeq& seq,
                                                std::int64_t bound, const SearchLimits& limits) {
  check_alpha(ctx, seq);
  if (bound < 0) return std::nullopt;
  CoverageSearch search(ctx, seq, limits);
  return search.find_within(bound);
}

SeqWeight seq_weight(const UnitContext& ctx, const ExponentSeq& seq, const SearchLimits& limits) {
  check_alpha(ctx, seq);
  CoverageSearch search(ctx, seq, limits);
  for (std::int64_t w = weight_lower_bound(ctx.n(), static_cast<std::int64_t>(seq.size()));; ++w) {
    if (auto budget = search.find_within(w)) return {w, std::move(*budget)};
  }
}

LevelWeight level_weight(const UnitContext& ctx, std::int64_t r, const SearchLimits& limits) {
  if (r < 1 || r > ctx.alpha())
    fail(ErrorKind::validation, "level " + std::to_string(r) + " outside [1, " + std::to_string(ctx.alpha()) + "]");
  const auto candidates = reduced_sequences(ctx.alpha(), r);
  for (std::int64_t w = weight_lower_bound(ctx.n(), r);; ++w) {
    for (const auto& seq : candidates) {
      CoverageSearch search(ctx, seq, limits);
      if (auto budget = search.find_within(w)) return {w, seq, std::move(*budget)};
    }
  }
}

SeqWeight alpha_weight(const UnitContext& ctx, const SearchLimits& limits) {
  return seq_weight(ctx, ExponentSeq::full(ctx.alpha()), limits);
}

// ---------------------------------------------------------------------------
// Transforms and the refinement order

ExponentSeq dual(const ExponentSeq& seq) {
  const std::int64_t alpha = seq.alpha();
  std::vector<std::int64_t> out;
  for (std::size_t s = 1; s < seq.size(); ++s) out.push_back(alpha - (seq[0] - seq[s]));
  out.push_back(0);
  return ExponentSeq(std::move(out), alpha);
}

ExponentSeq codual(const ExponentSeq& seq) {
  if (!seq.reduced()) fail(ErrorKind::validation, "codual needs a reduced sequence, got " + seq.to_string());
  const std::int64_t alpha = seq.alpha();
  const std::size_t r = seq.size();
  if (r == 1) return seq;
  const std::int64_t pivot = seq[r - 2];
  std::vector<std::int64_t> out{alpha - pivot};
  for (std::size_t s = 0; s + 2 < r; ++s) out.push_back(seq[s] - pivot);
  out.push_back(0);
  return ExponentSeq(std::move(out), alpha);
}

bool refines(const ExponentSeq& i, const ExponentSeq& j) {
  if (i.alpha() != j.alpha()) fail(ErrorKind::validation, "refinement compares sequences with different alpha");
  return std::all_of(i.entries().begin(), i.entries().end(), [&](std::int64_t e) { return j.contains(e); });
}

// ---------------------------------------------------------------------------
// Minimal prime sequences

MinimalPrimeResult minimal_prime_sequences(const UnitContext& ctx, const MinimalPrimeOptions& options) {
  MinimalPrimeResult result;
  const std::int64_t alpha = ctx.alpha();
  result.weight = alpha_weight(ctx, options.limits).weight;
  if (alpha == 1) {
    result.sequences.push_back(ExponentSeq::delta(1));
    return result;
  }
  const std::int64_t w = result.weight;
  auto realizes = [&](const ExponentSeq& seq) {
    return covering_budget_within(ctx, seq, w, options.limits).has_value();
  };

  // Every non-trailing entry of a minimal prime sequence carries a positive
  // budget in every witness (a zero-budget entry could be deleted), so at most
  // w entries precede the trailing 0.
  const std::int64_t max_support = std::min(w, alpha - 1);
  for (std::int64_t support = 0; support <= max_support; ++support) {
    if (static_cast<std::size_t>(support + 1) > options.max_length) {
      result.truncated = true;
      break;
    }
    for (const auto& seq : reduced_sequences(alpha, support + 1)) {
      if (!realizes(seq)) continue;
      bool minimal = true;
      for (std::size_t d = 0; d + 1 < seq.size() && minimal; ++d) {
        std::vector<std::int64_t> coarser;
        for (std::size_t s = 0; s < seq.size(); ++s)
          if (s != d) coarser.push_back(seq[s]);
        minimal = !realizes(ExponentSeq(std::move(coarser), alpha));
      }
      if (minimal) result.sequences.push_back(seq);
    }
  }
  if (result.sequences.empty()) {
    // Only reachable when truncated before any realising length.
    result.deg_alpha = -1;
    return result;
  }
  result.deg_alpha = result.sequences.front().degree();
  for (const auto& seq : result.sequences) result.deg_alpha = std::min(result.deg_alpha, seq.degree());
  return result;
}

// ---------------------------------------------------------------------------
// Formal sums

std::int64_t FormalSum::acs() const {
  std::int64_t total = 0;
  for (const auto& t : terms) total += std::llabs(t.coefficient);
  return total;
}

Residue FormalSum::value(const UnitContext& ctx) const {
  Residue v = 0;
  for (const auto& t : terms) v = mod(v + mod(t.coefficient, ctx.n()) * ctx.power(t.exponent), ctx.n());
  return v;
}

bool FormalSum::is_primal(std::int64_t alpha) const {
  std::map<std::int64_t, int> nonzero_per_class;
  for (const auto& t : terms)
    if (t.coefficient != 0 && ++nonzero_per_class[mod(t.exponent, alpha)] > 1) return false;
  return true;
}

FormalSum FormalSum::compact() const {
  FormalSum out;
  for (const auto& t : terms)
    if (t.coefficient != 0) out.terms.push_back(t);
  return out;
}

std::vector<std::int64_t> min_acs_representation(const UnitContext& ctx, const ExponentSeq& seq, Residue value) {
  check_alpha(ctx, seq);
  const std::int64_t n = ctx.n();
  struct Parent {
    std::int64_t from = -1;
    std::int32_t generator = -1;
    std::int32_t sign = 0;
  };
  std::vector<Parent> parent(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<std::int64_t> frontier;
  seen[0] = true;
  frontier.push(0);
  const Residue target = mod(value, n);
  while (!frontier.empty() && !seen[static_cast<std::size_t>(target)]) {
    const std::int64_t u = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < seq.size(); ++j) {
      for (const int sign : {1, -1}) {
        const std::int64_t v = mod(u + sign * ctx.power(seq[j]), n);
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        parent[static_cast<std::size_t>(v)] = {u, static_cast<std::int32_t>(j), sign};
        frontier.push(v);
      }
    }
  }
  std::vector<std::int64_t> coefficients(seq.size(), 0);
  for (std::int64_t v = target; v != 0;) {
    const Parent& p = parent[static_cast<std::size_t>(v)];
    coefficients[static_cast<std::size_t>(p.generator)] += p.sign;
    v = p.from;
  }
  return coefficients;
}

FormalSum primal_reduce(const UnitContext& ctx, const FormalSum& sum) {
  const std::int64_t alpha = ctx.alpha();
  FormalSum out = sum;
  // Collapse each exponent class onto its first occurrence.
  std::map<std::int64_t, std::size_t, std::greater<>> first_of_class;
  for (std::size_t t = 0; t < out.terms.size(); ++t) {
    const std::int64_t cls = mod(out.terms[t].exponent, alpha);
    const auto [it, inserted] = first_of_class.emplace(cls, t);
    if (!inserted) {
      out.terms[it->second].coefficient += out.terms[t].coefficient;
      out.terms[t].coefficient = 0;
    }
  }

  std::vector<std::int64_t> support;
  std::vector<std::size_t> slots;
  for (const auto& [cls, t] : first_of_class) {
    if (out.terms[t].coefficient == 0) continue;
    support.push_back(cls);
    slots.push_back(t);
  }
  if (support.empty()) return out;

  const ExponentSeq seq(support, alpha);
  const auto best = min_acs_representation(ctx, seq, out.value(ctx));
  std::int64_t best_acs = 0;
  std::int64_t current_acs = 0;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    best_acs += std::llabs(best[j]);
    current_acs += std::llabs(out.terms[slots[j]].coefficient);
  }
  if (best_acs < current_acs)
    for (std::size_t j = 0; j < slots.size(); ++j) out.terms[slots[j]].coefficient = best[j];
  return out;
}

}  // namespace metacyclic
