#include <doctest.h>

#include <numeric>

#include "metacyclic/error.hpp"
#include "metacyclic/residue.hpp"

using namespace metacyclic;

namespace {

std::int64_t brute_order(std::int64_t n, std::int64_t k) {
  std::int64_t x = k % n;
  std::int64_t d = 1;
  while (x != 1 % n) {
    x = x * k % n;
    ++d;
  }
  return d;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::validation;
}

}  // namespace

TEST_CASE("unit_order examples") {
  CHECK(unit_order(30, 7) == 4);
  CHECK(unit_order(13, 2) == 12);
  for (std::int64_t n = 3; n < 20; ++n) CHECK(unit_order(n, 1) == 1);
  CHECK(unit_order(13, 2) == brute_order(13, 2));
}

TEST_CASE("unit_order errors") {
  CHECK(kind_of([] { unit_order(30, 6); }) == ErrorKind::validation);
  CHECK(kind_of([] { unit_order(2, 1); }) == ErrorKind::validation);
  CHECK_THROWS_WITH(unit_order(30, 6), doctest::Contains("not a unit"));
  CHECK_THROWS_WITH(unit_order(2, 1), doctest::Contains("modulus too small"));
  CHECK_THROWS(unit_order(30, 0));
  CHECK_THROWS(unit_order(30, 31));
  CHECK_THROWS(unit_order(kMaxModulus + 1, 1));
}

TEST_CASE("build_context examples") {
  const auto c = build_context(30, 7);
  CHECK(c.alpha() == 4);
  CHECK(std::vector<Residue>(c.powers().begin(), c.powers().end()) == std::vector<Residue>{1, 7, 19, 13});
  CHECK_FALSE(c.neg_one());

  const auto d = build_context(13, 2);
  CHECK(d.alpha() == 12);
  CHECK(d.neg_one());

  const auto e = build_context(17, 1);
  CHECK(e.alpha() == 1);
  CHECK(e.powers().size() == 1);
  CHECK(e.powers()[0] == 1);
  CHECK_FALSE(e.neg_one());
}

TEST_CASE("power accepts any exponent") {
  const auto c = build_context(13, 2);
  CHECK(c.power(-1) == 7);  // 2 * 7 = 14
  CHECK(c.power(12) == 1);
  CHECK(c.power(25) == 2);
}

TEST_CASE("context invariants for every unit with n < 120") {
  for (std::int64_t n = 3; n < 120; ++n) {
    const std::int64_t phi = euler_phi(n);
    for (std::int64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const auto c = build_context(n, k);
      REQUIRE(c.alpha() == brute_order(n, k));
      CHECK(phi % c.alpha() == 0);
      std::vector<Residue> seen(c.powers().begin(), c.powers().end());
      for (std::size_t j = 0; j < seen.size(); ++j)
        CHECK(c.powers()[(j + 1) % seen.size()] == seen[j] * k % n);
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      if (c.alpha() % 2 == 0)
        CHECK(c.neg_one() == (pow_mod(k, c.alpha() / 2, n) == n - 1));
      else
        CHECK_FALSE(c.neg_one());
    }
  }
}

TEST_CASE("quotient_unit examples") {
  const auto a = quotient_unit(3, 2, 2);
  CHECK(a.unit == 2);
  CHECK(a.modulus == 3);
  CHECK(a.order == 2);
  const auto b = quotient_unit(5, 2, 2);
  CHECK(b.unit == 2);
  CHECK(b.order == 4);
  const auto c = quotient_unit(7, 3, 1);
  CHECK(c.unit == 1);
  CHECK(c.order == 1);
  CHECK_THROWS(quotient_unit(4, 2, 1));
  CHECK_THROWS(quotient_unit(3, 2, 3));
  CHECK_THROWS(quotient_unit(3, 1, 2));
}

TEST_CASE("quotient order relation for odd p^e <= 243") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (int e = 2; checked_pow(p, e) <= 243; ++e) {
      const std::int64_t pe = checked_pow(p, e);
      for (std::int64_t k = 1; k < pe; ++k) {
        if (k % p == 0) continue;
        const auto q = quotient_unit(p, e, k);
        const std::int64_t m = brute_order(pe, k);
        CHECK(q.unit == k % q.modulus);
        CHECK(q.order == brute_order(q.modulus, q.unit));
        CHECK(q.order == (m % p == 0 ? m / p : m));
      }
    }
  }
}

TEST_CASE("quotient order relation fails for -1 modulo 2^e") {
  // ord(7 mod 8) = 2 but ord(3 mod 4) = 2, not 1.
  const auto q = quotient_unit(2, 3, 7);
  CHECK(q.unit == 3);
  CHECK(q.order == 2);
  CHECK(unit_order(8, 7) == 2);
  // The relation does hold for the other units modulo 2^e.
  for (int e = 3; e <= 7; ++e) {
    const std::int64_t pe = checked_pow(2, e);
    for (std::int64_t k = 1; k < pe; k += 2) {
      const auto r = quotient_unit(2, e, k);
      const std::int64_t m = unit_order(pe, k);
      if (m % 2 == 0 && r.order != m / 2) CHECK(k % 4 == 3);
    }
  }
}

TEST_CASE("mod, floor_div, pow_mod, is_prime") {
  CHECK(mod(-1, 7) == 6);
  CHECK(mod(14, 7) == 0);
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(5, 3) == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS(checked_pow(2, 31));
}
