#pragma once

// Evaluators for the diameter and weight bounds. Each returns a BoundReport
// recording the hypotheses, the bound values as exact rationals, and the
// exact diameter or weight when it is affordable to compute.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metacyclic/group.hpp"
#include "metacyclic/omega.hpp"
#include "metacyclic/residue.hpp"

namespace metacyclic {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t value) : num(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  bool is_integer() const noexcept { return den == 1; }
  std::string to_string() const;
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

enum class Verdict { holds, violated, not_applicable, exact_unavailable };

std::string_view to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool satisfied;
};

struct NamedValue {
  std::string name;
  Rational value;
};

struct BoundReport {
  std::string subject;     // e.g. "G(60,61,2)" or "(p=3,e=2,k=2)"
  std::string theorem_id;  // main, prime_corollary, general_metacyclic, prime_weight, ...
  std::vector<Hypothesis> hypotheses;
  std::vector<NamedValue> values;  // "bound", or "lower"/"upper", plus auxiliary quantities
  std::string exact_name;          // "diameter", "weight" or "degree"
  std::optional<std::int64_t> exact;
  Verdict verdict = Verdict::exact_unavailable;
  std::vector<std::string> notes;

  bool hypotheses_hold() const;
  std::optional<Rational> value(std::string_view name) const;
};

// One JSON object, carrying schema_version.
std::string to_json(const BoundReport& report);

// Header subject,theorem_id,hypotheses,bound,lower,upper,exact,verdict; one row per report.
void write_sweep_csv(std::ostream& out, const std::vector<BoundReport>& reports);

struct BoundOptions {
  // Exact diameters are attached only for groups up to this order.
  std::size_t max_elements = kDefaultElementBudget;
  SearchLimits limits;
  MinimalPrimeOptions prime_options;
};

// Values a caller already knows; anything missing is computed on demand.
struct KnownValues {
  std::optional<std::int64_t> weight;     // wt(n, k; alpha)
  std::optional<std::int64_t> deg_alpha;  // deg(n, k; alpha)
  std::optional<std::int64_t> diameter;   // diam(G_{m,n,k})
};

// [m/2] + wt(n,k;alpha), plus deg(n,k;alpha) when alpha = m.
BoundReport main_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known = {},
                       const BoundOptions& options = {});

// [m/2] + wt(n,k;alpha) under the extra hypothesis 2 deg(n,k;alpha) <= [alpha/2].
BoundReport prime_corollary_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known = {},
                                  const BoundOptions& options = {});

// Main bound of the covering split group G_{m0 n / l, n, k}; exact value is the
// quotient's diameter, "cover_diameter" is attached alongside.
BoundReport general_metacyclic_bound(const GeneralPresentation& group, const BoundOptions& options = {});

// wt(p,k;p-1) <= (p+3)/4 or (p+5)/4, and the consecutive sequence of degree
// (p-5)/4 or (p-3)/4 whose weight obeys the same bound. Throws unless p is an
// odd prime and k a primitive root.
BoundReport prime_weight_bound(std::int64_t p, Residue k, const BoundOptions& options = {});

// The improvement to (p-1)/4 or (p+1)/4, applicable when 2 lies in A or -A for
// A = {k^j : 0 <= j <= i_1}.
BoundReport prime_weight_refined_bound(std::int64_t p, Residue k, const BoundOptions& options = {});

// epsilon(p) = +1 for p == 1 (mod 4), -1 otherwise.
int epsilon(std::int64_t p);
// gamma(k) = 4 if k^(2^(e-3)) == -1 (mod 2^e), 2 otherwise.
int gamma(Residue k, int e);

// Lower and upper weight bounds for a unit of maximal order modulo p^e.
BoundReport prime_power_sandwich(std::int64_t p, int e, Residue k, const BoundOptions& options = {});

// wt(p^(e-1), k0; m0) <= wt(p^e, k; m) <= wt(p^(e-1), k0; m0) + (p if p | m else [m/2]).
BoundReport lift_bound(std::int64_t p, int e, Residue k, const BoundOptions& options = {});

// deg(n,k;alpha) <= alpha/2 when k^(alpha/2) == -1.
BoundReport deg_bound(const UnitContext& ctx, const BoundOptions& options = {});

// [m/2] + wt(n,k;alpha) with no hypotheses; every tuple is in scope.
BoundReport conjecture_bound(std::int64_t m, const UnitContext& ctx, const KnownValues& known = {},
                             const BoundOptions& options = {});

}  // namespace metacyclic
