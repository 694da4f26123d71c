#pragma once

// Coverage sets Omega(i, lambda) over Z_n and the weight invariants built on
// them: weights of exponent sequences and of levels, the weight of the full
// sequence Delta = (alpha-1, ..., 1, 0), the dual/codual transforms, minimal
// prime sequences and deg(n, k; alpha), and primal reduction of formal sums.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metacyclic/residue.hpp"
#include "metacyclic/residue_set.hpp"

namespace metacyclic {

/// Strictly decreasing exponents alpha-1 >= i_1 > ... > i_r >= 0, r >= 1.
class ExponentSeq {
 public:
  ExponentSeq(std::vector<std::int64_t> entries, std::int64_t alpha);

  // Delta: alpha-1, alpha-2, ..., 0.
  static ExponentSeq full(std::int64_t alpha);
  // delta: the reduced singleton (0).
  static ExponentSeq delta(std::int64_t alpha);
  // Comma separated entries, e.g. "3,1,0".
  static ExponentSeq parse(std::string_view text, std::int64_t alpha);

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t alpha() const noexcept { return alpha_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  bool reduced() const noexcept { return entries_.back() == 0; }
  std::int64_t degree() const noexcept { return entries_.front(); }
  // Smallest nonzero entry; empty for the sequence (0).
  std::optional<std::int64_t> codegree() const;
  bool contains(std::int64_t e) const;

  std::string to_string() const;

  bool operator==(const ExponentSeq&) const = default;
  auto operator<=>(const ExponentSeq& other) const { return entries_ <=> other.entries_; }

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t alpha_;
};

struct BudgetSeq {
  std::vector<std::int64_t> bounds;

  std::int64_t weight() const;
  std::string to_string() const;
  bool operator==(const BudgetSeq&) const = default;
};

using OmegaSet = ResidueSet;

// { sum_j b_j k^(i_j) mod n : |b_j| <= lambda_j }.
OmegaSet omega_coverage(const UnitContext& ctx, const ExponentSeq& seq, const BudgetSeq& budget);

struct SearchLimits {
  // Cap on set dilations per search; 0 means unlimited. Exceeding it throws ErrorKind::budget.
  std::uint64_t max_nodes = 0;
};

struct SeqWeight {
  std::int64_t weight;
  BudgetSeq witness;  // lexicographically smallest minimiser
};

// Lexicographically smallest budget of total weight <= bound whose Omega covers Z_n.
std::optional<BudgetSeq> covering_budget_within(const UnitContext& ctx, const ExponentSeq& seq,
                                                std::int64_t bound, const SearchLimits& limits = {});

// wt(n, k; i): exact minimum by iterative deepening on the total weight.
SeqWeight seq_weight(const UnitContext& ctx, const ExponentSeq& seq, const SearchLimits& limits = {});

struct LevelWeight {
  std::int64_t weight;
  ExponentSeq sequence;  // first minimising reduced sequence in lexicographic order
  BudgetSeq witness;
};

// wt(n, k; r), minimised over reduced sequences of length r.
LevelWeight level_weight(const UnitContext& ctx, std::int64_t r, const SearchLimits& limits = {});

// wt(n, k; alpha) = wt(n, k; Delta).
SeqWeight alpha_weight(const UnitContext& ctx, const SearchLimits& limits = {});

// I(i): alpha-(i_1-i_2) > ... > alpha-(i_1-i_r) > 0.
ExponentSeq dual(const ExponentSeq& seq);
// J(i) of a reduced sequence: alpha-i_{r-1} > i_1-i_{r-1} > ... > i_{r-2}-i_{r-1} > 0.
ExponentSeq codual(const ExponentSeq& seq);
// j is obtained from i by adding zero or more terms.
bool refines(const ExponentSeq& i, const ExponentSeq& j);

struct MinimalPrimeOptions {
  std::size_t max_length = 16;
  SearchLimits limits;
};

struct MinimalPrimeResult {
  std::vector<ExponentSeq> sequences;  // ordered by length, then lexicographically
  std::int64_t deg_alpha = 0;
  std::int64_t weight = 0;             // wt(n, k; alpha)
  bool truncated = false;              // max_length cut the enumeration short
};

// Reduced sequences realising wt(n, k; alpha) none of whose reduced proper
// coarsenings does; deg_alpha is their smallest degree.
MinimalPrimeResult minimal_prime_sequences(const UnitContext& ctx, const MinimalPrimeOptions& options = {});

struct FormalTerm {
  std::int64_t coefficient;
  std::int64_t exponent;
  bool operator==(const FormalTerm&) const = default;
};

/// b_1 k^(c_1) + ... + b_t k^(c_t), kept as written (no collapsing).
struct FormalSum {
  std::vector<FormalTerm> terms;

  std::int64_t acs() const;
  Residue value(const UnitContext& ctx) const;
  // At most one nonzero coefficient per exponent class mod alpha.
  bool is_primal(std::int64_t alpha) const;
  // Same sum with zero terms dropped.
  FormalSum compact() const;
  bool operator==(const FormalSum&) const = default;
};

// Same exponents and multiplicities, same value mod n, primal, acs not increased,
// and acs no larger than the weight of the collapsed support sequence.
FormalSum primal_reduce(const UnitContext& ctx, const FormalSum& sum);

// Coefficients c_j (aligned with seq) minimising sum |c_j| subject to
// sum c_j k^(i_j) == value (mod n).
std::vector<std::int64_t> min_acs_representation(const UnitContext& ctx, const ExponentSeq& seq, Residue value);

}  // namespace metacyclic
