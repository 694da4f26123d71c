#pragma once

// Exhaustive and randomised sweeps over the invariants of the weight
// machinery, the diameter and weight bounds, and the two reduction steps.

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metacyclic/bounds.hpp"

namespace metacyclic {

struct CheckTally {
  std::string name;
  bool theorem = true;  // false for empirical checks whose failures do not contradict a theorem
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> counterexamples;  // first few failures

  void record(bool ok, const std::string& counterexample);
  template <class F>
  void check(bool ok, F&& describe) {
    record(ok, ok ? std::string() : describe());
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<CheckTally> checks;  // deque keeps tally references stable

  CheckTally& tally(const std::string& name, bool theorem = true);
  const CheckTally* find(const std::string& name) const;
  void merge(const SuiteReport& other);
  // No theorem check failed.
  bool passed() const;
};

// One line per check, then its counterexamples indented.
void print_suite(std::ostream& out, const SuiteReport& report);

struct SweepOptions {
  std::optional<std::int64_t> max_n;  // per-suite default when unset
  std::optional<std::int64_t> max_m;
  std::int64_t max_order = 5000;      // bound on m*n for group sweeps
  std::int64_t max_alpha = 12;
  std::int64_t max_prime = 61;        // prime weight bounds run over odd p up to this
  std::int64_t max_general_order = 2000;
  std::uint64_t samples = 100000;     // random formal sums for the first reduction
  std::uint64_t seed = 20231016;
  std::string family;                 // bounds suite: run only this family when nonempty
  unsigned jobs = 1;
  BoundOptions bound;
};

// Dual/codual invariance, order reversal, delta and Delta anchors, level
// minima, minimal prime sequences against a subset oracle, deg(n,k;alpha) <= alpha/2
// and the degree/codegree symmetry. Defaults: n <= 40.
SuiteReport verify_props(const SweepOptions& options);

// Families main, prime_corollary, bound_path, general, prime_weight,
// prime_weight_refined, sandwich, lift, deg and conjecture. Defaults: n <= 40, m <= 40.
SuiteReport verify_bounds(const SweepOptions& options);

// primal_reduce on random formal sums and the syllable-bounded norm oracle
// on every group with m*n <= max_order and alpha <= max_alpha.
SuiteReport verify_reductions(const SweepOptions& options);

// The (m, n, k) tuples of split groups in range: n in [3, max_n], m in [1, max_m],
// m*n <= max_order, k a unit with ord(k) | m and ord(k) <= max_alpha.
struct GroupTuple {
  std::int64_t m;
  std::int64_t n;
  Residue k;
};
std::vector<GroupTuple> group_tuples(std::int64_t max_n, std::int64_t max_m, std::int64_t max_order,
                                     std::int64_t max_alpha, bool neg_one_only);

}  // namespace metacyclic
