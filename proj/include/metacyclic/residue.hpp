#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace metacyclic {

using Residue = std::int64_t;

// Products of two residues must fit in int64, so moduli stay below 2^31.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

// Canonical representative of v in [0, n).
constexpr Residue mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t floor_div(std::int64_t v, std::int64_t d) {
  const std::int64_t q = v / d;
  return (v % d != 0 && ((v < 0) != (d < 0))) ? q - 1 : q;
}

Residue pow_mod(Residue base, std::int64_t exponent, std::int64_t n);

// p^e, throwing a validation error if the result reaches kMaxModulus.
std::int64_t checked_pow(std::int64_t p, int e);

// Deterministic trial division; intended for the small primes used by the bound evaluators.
bool is_prime(std::int64_t p);

// Least alpha >= 1 with k^alpha == 1 (mod n), by successive multiplication.
std::int64_t unit_order(std::int64_t n, Residue k);

/// Arithmetic environment for a unit k of Z_n: its order alpha, the table
/// k^0, ..., k^(alpha-1), and whether k^(alpha/2) == -1.
class UnitContext {
 public:
  std::int64_t n() const noexcept { return n_; }
  Residue k() const noexcept { return k_; }
  std::int64_t alpha() const noexcept { return alpha_; }
  std::span<const Residue> powers() const noexcept { return powers_; }

  // alpha is even and k^(alpha/2) == n - 1.
  bool neg_one() const noexcept { return neg_one_; }

  // k^e mod n for any integer e, negative exponents included.
  Residue power(std::int64_t e) const noexcept { return powers_[static_cast<std::size_t>(mod(e, alpha_))]; }

  Residue reduce(std::int64_t v) const noexcept { return mod(v, n_); }

  friend UnitContext build_context(std::int64_t n, Residue k);

 private:
  UnitContext() = default;

  std::int64_t n_ = 0;
  Residue k_ = 0;
  std::int64_t alpha_ = 0;
  std::vector<Residue> powers_;
  bool neg_one_ = false;
};

UnitContext build_context(std::int64_t n, Residue k);

struct QuotientUnit {
  Residue unit;           // k mod p^(e-1)
  std::int64_t modulus;   // p^(e-1)
  std::int64_t order;     // ord(unit) in Z_(p^(e-1))
};

// Image of a unit of Z_(p^e) under the natural map onto Z_(p^(e-1)).
QuotientUnit quotient_unit(std::int64_t p, int e, Residue k);

}  // namespace metacyclic
