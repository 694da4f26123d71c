#include "metacyclic/residue.hpp"

#include <numeric>
#include <string>

#include "metacyclic/error.hpp"

namespace metacyclic {

namespace {

void validate_unit(std::int64_t n, Residue k) {
  if (n < 3) fail(ErrorKind::validation, "modulus too small: n = " + std::to_string(n));
  if (n > kMaxModulus) fail(ErrorKind::validation, "modulus exceeds 2^31 - 1: n = " + std::to_string(n));
  if (k < 1 || k >= n)
    fail(ErrorKind::validation, "residue out of range [1, n-1]: k = " + std::to_string(k));
  if (std::gcd(k, n) != 1)
    fail(ErrorKind::validation, "not a unit: gcd(" + std::to_string(k) + ", " + std::to_string(n) + ") != 1");
}

// Order of a unit without the n >= 3 restriction; the quotient map can land in Z_2.
std::int64_t raw_order(std::int64_t n, Residue k) {
  if (n <= 2) return 1;
  std::int64_t alpha = 1;
  for (Residue x = k % n; x != 1; x = x * k % n) ++alpha;
  return alpha;
}

}  // namespace

Residue pow_mod(Residue base, std::int64_t exponent, std::int64_t n) {
  Residue result = 1 % n;
  Residue b = mod(base, n);
  for (std::int64_t e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * b % n;
    b = b * b % n;
  }
  return result;
}

std::int64_t checked_pow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > kMaxModulus)
      fail(ErrorKind::validation, std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^31 - 1");
  }
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t unit_order(std::int64_t n, Residue k) {
  validate_unit(n, k);
  return raw_order(n, k);
}

UnitContext build_context(std::int64_t n, Residue k) {
  validate_unit(n, k);
  UnitContext ctx;
  ctx.n_ = n;
  ctx.k_ = k;
  ctx.powers_.push_back(1);
  for (Residue x = k; x != 1; x = x * k % n) ctx.powers_.push_back(x);
  ctx.alpha_ = static_cast<std::int64_t>(ctx.powers_.size());
  ctx.neg_one_ = ctx.alpha_ % 2 == 0 && ctx.powers_[static_cast<std::size_t>(ctx.alpha_ / 2)] == n - 1;
  return ctx;
}

QuotientUnit quotient_unit(std::int64_t p, int e, Residue k) {
  if (!is_prime(p)) fail(ErrorKind::validation, "not a prime: p = " + std::to_string(p));
  if (e < 2) fail(ErrorKind::validation, "quotient map needs e >= 2");
  const std::int64_t pe = checked_pow(p, e);
  if (k < 1 || k >= pe || k % p == 0)
    fail(ErrorKind::validation, "not a unit modulo " + std::to_string(pe) + ": k = " + std::to_string(k));
  const std::int64_t q = pe / p;
  const Residue k0 = k % q;
  return {k0, q, raw_order(q, k0)};
}

}  // namespace metacyclic
