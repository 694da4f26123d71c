#include <doctest.h>

#include <set>
#include <sstream>

#include "metacyclic/error.hpp"
#include "metacyclic/tables.hpp"

using namespace metacyclic;

namespace {

// Residues sum_j b_j k^j (mod n) with |b_j| <= lambda[j], by direct enumeration.
bool naive_ascending_covers(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& lambda) {
  std::set<std::int64_t> reach{0};
  std::int64_t u = 1;
  for (std::int64_t l : lambda) {
    std::set<std::int64_t> next;
    for (std::int64_t s : reach)
      for (std::int64_t b = -l; b <= l; ++b) next.insert(((s + b * u) % n + n) % n);
    reach.swap(next);
    u = u * k % n;
  }
  return static_cast<std::int64_t>(reach.size()) == n;
}

}  // namespace

TEST_CASE("golden tables are well formed") {
  CHECK(golden_primes_1mod4().size() == 7);
  CHECK(golden_primes_3mod4().size() == 8);
  CHECK(golden_table("primes-1mod4").data() == golden_primes_1mod4().data());
  CHECK_THROWS_AS(golden_table("primes"), Error);
  for (const auto& rows : {golden_primes_1mod4(), golden_primes_3mod4()})
    for (const auto& r : rows) {
      CAPTURE(r.n);
      CHECK(r.m == r.n - 1);
      CHECK(r.bound == r.m / 2 + r.wt);
      CHECK(r.diam <= r.bound);
      CHECK(BudgetSeq{r.lambda}.weight() == r.wt);
      CHECK(naive_ascending_covers(r.n, r.k, r.lambda));
    }
  const auto& last = golden_primes_3mod4()[5];
  CHECK(last.m == 42);
  CHECK(last.n == 43);
  CHECK(last.k == 3);
}

TEST_CASE("ascending budget convention") {
  const auto ctx = build_context(13, 2);
  const std::vector<std::int64_t> lambda{1, 1, 1};
  const auto [seq, budget] = ascending_budget(ctx, lambda);
  CHECK(seq == ExponentSeq({2, 1, 0}, 12));
  CHECK(budget.bounds == std::vector<std::int64_t>{1, 1, 1});
  const std::vector<std::int64_t> skew{3, 0, 1};
  CHECK(ascending_budget(ctx, skew).second.bounds == std::vector<std::int64_t>{1, 0, 3});
  for (const auto& l : {std::vector<std::int64_t>{6}, {1, 1, 1}, {2, 1}, {1, 2}, {3, 0, 1}, {1, 0, 0, 1}})
    CHECK(lambda_covers(ctx, l) == naive_ascending_covers(13, 2, l));
  CHECK_THROWS_AS(ascending_budget(ctx, std::vector<std::int64_t>{}), Error);
}

TEST_CASE("golden rows are reproduced") {
  for (const auto& rows : {golden_primes_1mod4(), golden_primes_3mod4()})
    for (const auto& golden : rows) {
      CAPTURE(golden.n);
      const auto computed = compute_table_row(golden.m, golden.n, golden.k);
      const auto check = check_table_row(golden, computed);
      CHECK(check.ok());
      CHECK(naive_ascending_covers(golden.n, golden.k, computed.lambda));
      CHECK((computed.lambda.size() == 1 || computed.lambda.back() != 0));
    }
}

TEST_CASE("row check reports mismatches") {
  const auto golden = golden_primes_1mod4()[0];
  auto computed = compute_table_row(golden.m, golden.n, golden.k);
  computed.diam += 1;
  const auto check = check_table_row(golden, computed);
  CHECK_FALSE(check.ok());
  CHECK(check.mismatches.front().rfind("diam", 0) == 0);

  auto bad = golden;
  bad.lambda = {1};
  CHECK_FALSE(check_table_row(bad, compute_table_row(golden.m, golden.n, golden.k)).ok());
}

TEST_CASE("table CSV round trip") {
  std::ostringstream out;
  write_table_csv(out, golden_primes_3mod4());
  std::istringstream in(out.str());
  const auto rows = parse_table_csv(in);
  REQUIRE(rows.size() == golden_primes_3mod4().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& a = rows[i];
    const auto& b = golden_primes_3mod4()[i];
    CHECK(a.m == b.m);
    CHECK(a.n == b.n);
    CHECK(a.k == b.k);
    CHECK(a.wt == b.wt);
    CHECK(a.lambda == b.lambda);
    CHECK(a.diam == b.diam);
    CHECK(a.bound == b.bound);
  }
  std::istringstream bad_header("m,n,k\n");
  CHECK_THROWS_AS(parse_table_csv(bad_header), Error);
  std::istringstream bad_row("m,n,k,wt,lambda,diam,bound\n6,7,3,2\n");
  CHECK_THROWS_AS(parse_table_csv(bad_row), Error);
}

TEST_CASE("(30,7) coverage example") {
  std::ostringstream out;
  const auto check = write_omega_example(out);
  CHECK(check.ok());
  REQUIRE(check.minima.size() == 3);
  const auto minima = golden_omega_minima();
  for (std::size_t i = 0; i < 3; ++i) CHECK(check.minima[i].weight == minima[i]);
  CHECK(out.str().rfind("kind,sequence,lambda,weight,covers\n", 0) == 0);
  CHECK(out.str().find("minimum,1;0,2;3,5,1") != std::string::npos);
  CHECK(omega_example_sequence(2) == ExponentSeq({2, 0}, 4));
  CHECK_THROWS_AS(omega_example_sequence(4), Error);

  const auto ctx = build_context(30, 7);
  for (const auto& row : golden_omega_example()) {
    const auto seq = omega_example_sequence(row.label);
    CHECK(omega_coverage(ctx, seq, BudgetSeq{{row.lambda1, row.lambda2}}).full());
  }
}
