#pragma once

// Split metacyclic groups G_{m,n,k} = <x, y | x^m = y^n = 1, x^-1 y x = y^k>
// and general ones G_{m0,l,n,k} = <x, y | x^m0 = y^l, y^n = 1, x^-1 y x = y^k>,
// both in normal form x^a y^b, with word norms taken over {x, x^-1, y, y^-1}.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "metacyclic/omega.hpp"
#include "metacyclic/residue.hpp"

namespace metacyclic {

struct GroupElement {
  std::int64_t a = 0;  // exponent of x
  std::int64_t b = 0;  // exponent of y
  auto operator<=>(const GroupElement&) const = default;
};

class SplitPresentation {
 public:
  // Requires m >= 1, n >= 3, k a unit mod n and k^m == 1 (mod n).
  SplitPresentation(std::int64_t m, std::int64_t n, Residue k);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return ctx_.n(); }
  Residue k() const noexcept { return ctx_.k(); }
  std::int64_t x_order() const noexcept { return m_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(m_ * ctx_.n()); }
  const UnitContext& context() const noexcept { return ctx_; }

  GroupElement multiply(GroupElement g, GroupElement h) const;
  GroupElement invert(GroupElement g) const;
  GroupElement x_power(std::int64_t e) const;
  GroupElement y_power(std::int64_t e) const { return {0, mod(e, n())}; }

  std::size_t index(GroupElement g) const { return static_cast<std::size_t>(g.a * n() + g.b); }
  GroupElement element(std::size_t i) const {
    return {static_cast<std::int64_t>(i) / n(), static_cast<std::int64_t>(i) % n()};
  }

 private:
  std::int64_t m_;
  UnitContext ctx_;
};

class GeneralPresentation {
 public:
  // Requires k^m0 == 1 (mod n), n | l(k-1) and l | n; otherwise throws listing every failed condition.
  GeneralPresentation(std::int64_t m0, std::int64_t ell, std::int64_t n, Residue k);

  // Failed presentation conditions, empty when valid.
  static std::vector<std::string> violations(std::int64_t m0, std::int64_t ell, std::int64_t n, Residue k);

  std::int64_t m0() const noexcept { return m0_; }
  std::int64_t ell() const noexcept { return ell_; }
  std::int64_t n() const noexcept { return ctx_.n(); }
  Residue k() const noexcept { return ctx_.k(); }
  std::int64_t x_order() const noexcept { return m0_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(m0_ * ctx_.n()); }
  const UnitContext& context() const noexcept { return ctx_; }

  // The split group G_{m0 n / l, n, k} mapping onto this one.
  SplitPresentation cover() const { return SplitPresentation(m0_ * n() / ell_, n(), k()); }

  GroupElement multiply(GroupElement g, GroupElement h) const;
  GroupElement invert(GroupElement g) const;
  GroupElement x_power(std::int64_t e) const;
  GroupElement y_power(std::int64_t e) const { return {0, mod(e, n())}; }

  std::size_t index(GroupElement g) const { return static_cast<std::size_t>(g.a * n() + g.b); }
  GroupElement element(std::size_t i) const {
    return {static_cast<std::int64_t>(i) / n(), static_cast<std::int64_t>(i) % n()};
  }

 private:
  std::int64_t m0_;
  std::int64_t ell_;
  UnitContext ctx_;
};

template <class P>
concept Presentation = requires(const P& p, GroupElement g, std::int64_t e, std::size_t i) {
  { p.multiply(g, g) } -> std::same_as<GroupElement>;
  { p.invert(g) } -> std::same_as<GroupElement>;
  { p.x_power(e) } -> std::same_as<GroupElement>;
  { p.y_power(e) } -> std::same_as<GroupElement>;
  { p.x_order() } -> std::convertible_to<std::int64_t>;
  { p.n() } -> std::convertible_to<std::int64_t>;
  { p.size() } -> std::convertible_to<std::size_t>;
  { p.index(g) } -> std::convertible_to<std::size_t>;
  { p.element(i) } -> std::same_as<GroupElement>;
};

/// Word x^(x_1) y^(y_1) ... x^(x_t) y^(y_t) with signed exponents.
struct Syllable {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Syllable&) const = default;
};

struct Path {
  std::vector<Syllable> steps;

  std::size_t syllable() const noexcept { return steps.size(); }
  std::int64_t length() const;
  // Reversed word with negated exponents; (0, 0) syllables are dropped.
  Path inverse() const;
};

struct PathEval {
  GroupElement element;
  std::size_t syllable = 0;
  std::int64_t length = 0;
  bool reduced = true;
};

template <Presentation P>
PathEval eval_path(const P& group, const Path& path) {
  PathEval out;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& s = path.steps[i];
    out.element = group.multiply(out.element, group.x_power(s.x));
    out.element = group.multiply(out.element, group.y_power(s.y));
    if (i > 0 && mod(s.x, group.x_order()) == 0) out.reduced = false;
    if (i + 1 < path.steps.size() && mod(s.y, group.n()) == 0) out.reduced = false;
  }
  out.syllable = path.syllable();
  out.length = path.length();
  return out;
}

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

struct NormTable {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<std::int32_t> norms;  // indexed by a * n + b
  std::int32_t diameter = 0;

  std::int32_t norm(GroupElement g) const { return norms[static_cast<std::size_t>(g.a * n + g.b)]; }
  // Header "a,b,norm", then one row per element, then "# diameter=<d>".
  void write_csv(std::ostream& out) const;
};

// Breadth-first search from the identity over x, x^-1, y, y^-1.
NormTable all_norms(const SplitPresentation& group, std::size_t max_elements = kDefaultElementBudget);
NormTable all_norms(const GeneralPresentation& group, std::size_t max_elements = kDefaultElementBudget);

// Shortest word lengths when words are restricted to at most max_syllables
// syllables x^(a_i) y^(b_i). Unreachable elements get INT32_MAX.
std::vector<std::int32_t> syllable_bounded_norms(const SplitPresentation& group, std::int64_t max_syllables,
                                                 std::size_t max_elements = kDefaultElementBudget);

// x-exponent mapped into [-floor(m/2), floor(m/2)]; the class m/2 of even m maps to +m/2.
std::int64_t centered_exponent(std::int64_t a, std::int64_t m);

struct BoundPath {
  Path path;
  int case_number = 0;            // 1, 2 or 3; 0 for the identity
  std::int64_t length_bound = 0;  // bound this case guarantees for path.length()
};

// Path to g following the constructive proof of the diameter bound: x^xi y^b_1
// x^(i_1-i_2) y^b_2 ... x^(i_(t-1)) y^b_t over the minimal prime sequence
// `prime_seq`, whose weight must not exceed `weight`. Needs k^(alpha/2) == -1.
BoundPath construct_bound_path(const SplitPresentation& group, GroupElement g, const ExponentSeq& prime_seq,
                               std::int64_t weight);

}  // namespace metacyclic
