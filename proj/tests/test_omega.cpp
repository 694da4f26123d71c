#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "metacyclic/error.hpp"
#include "metacyclic/omega.hpp"
#include "metacyclic/version.hpp"
#include "metacyclic/weight_cache.hpp"

using namespace metacyclic;

namespace {

ExponentSeq seq(std::vector<std::int64_t> e, std::int64_t alpha) { return ExponentSeq(std::move(e), alpha); }

// Omega by enumerating every coefficient vector.
std::set<std::int64_t> naive_omega(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& exps,
                                   const std::vector<std::int64_t>& lam) {
  std::set<std::int64_t> out{0};
  for (std::size_t j = 0; j < exps.size(); ++j) {
    std::int64_t u = 1;
    for (std::int64_t e = 0; e < exps[j]; ++e) u = u * k % n;
    std::set<std::int64_t> next;
    for (std::int64_t s : out)
      for (std::int64_t b = -lam[j]; b <= lam[j]; ++b) next.insert(((s + b * u) % n + n) % n);
    out.swap(next);
  }
  return out;
}

// Smallest total budget covering Z_n, by trying every composition of w = 0, 1, 2, ...
std::int64_t naive_weight(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& exps) {
  for (std::int64_t w = 0;; ++w) {
    std::vector<std::int64_t> lam(exps.size(), 0);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t j, std::int64_t left) -> void {
      if (found) return;
      if (j + 1 == exps.size()) {
        lam[j] = left;
        if (static_cast<std::int64_t>(naive_omega(n, k, exps, lam).size()) == n) found = true;
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        lam[j] = v;
        self(self, j + 1, left - v);
      }
    };
    rec(rec, 0, w);
    if (found) return w;
  }
}

}  // namespace

TEST_CASE("ExponentSeq validation and accessors") {
  const auto s = seq({3, 1, 0}, 4);
  CHECK(s.reduced());
  CHECK(s.degree() == 3);
  CHECK(s.codegree() == 1);
  CHECK(s.to_string() == "3,1,0");
  CHECK_FALSE(seq({0}, 4).codegree().has_value());
  CHECK_FALSE(seq({2, 1}, 4).reduced());
  CHECK_THROWS(seq({1, 1}, 4));
  CHECK_THROWS(seq({4, 0}, 4));
  CHECK_THROWS(seq({}, 4));
  CHECK_THROWS(seq({0, 1}, 4));
  CHECK(ExponentSeq::parse("3,1,0", 4) == s);
  CHECK(ExponentSeq::parse(" 2, 0 ", 4) == seq({2, 0}, 4));
  CHECK_THROWS(ExponentSeq::parse("3,x", 4));
  CHECK_THROWS(ExponentSeq::parse("", 4));
  CHECK(ExponentSeq::full(4) == seq({3, 2, 1, 0}, 4));
  CHECK(ExponentSeq::delta(4) == seq({0}, 4));
}

TEST_CASE("omega_coverage examples") {
  const auto ctx = build_context(30, 7);
  CHECK(omega_coverage(ctx, seq({1, 0}, 4), BudgetSeq{{2, 3}}).count() == 30);
  const auto zero = omega_coverage(ctx, seq({1, 0}, 4), BudgetSeq{{0, 0}});
  CHECK(zero.count() == 1);
  CHECK(zero.contains(0));
  CHECK(omega_coverage(ctx, seq({2, 0}, 4), BudgetSeq{{1, 5}}).full());
  CHECK_THROWS(omega_coverage(ctx, seq({1, 0}, 4), BudgetSeq{{1}}));
  CHECK_THROWS(omega_coverage(ctx, seq({1, 0}, 4), BudgetSeq{{1, -1}}));
}

TEST_CASE("omega_coverage agrees with enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(3, 90)(rng);
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    while (std::gcd(k, n) != 1) k = k % (n - 1) + 1;
    const auto ctx = build_context(n, k);
    std::vector<std::int64_t> exps;
    for (std::int64_t e = ctx.alpha() - 1; e >= 0; --e)
      if (rng() % 2 || (e == 0 && exps.empty())) exps.push_back(e);
    std::vector<std::int64_t> lam;
    for (std::size_t j = 0; j < exps.size(); ++j) lam.push_back(static_cast<std::int64_t>(rng() % 4));
    const auto set = omega_coverage(ctx, seq(exps, ctx.alpha()), BudgetSeq{lam});
    const auto want = naive_omega(n, k, exps, lam);
    const auto got = set.elements();
    CHECK(std::set<std::int64_t>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("Omega sets are symmetric, contain 0 and grow with the budget") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(3, 200)(rng);
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, n - 1)(rng);
    while (std::gcd(k, n) != 1) k = k % (n - 1) + 1;
    const auto ctx = build_context(n, k);
    std::vector<std::int64_t> exps;
    for (std::int64_t e = ctx.alpha() - 1; e >= 0; --e)
      if (rng() % 3 == 0 || (e == 0 && exps.empty())) exps.push_back(e);
    std::vector<std::int64_t> lam, bigger;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      lam.push_back(static_cast<std::int64_t>(rng() % 3));
      bigger.push_back(lam.back() + static_cast<std::int64_t>(rng() % 2));
    }
    const auto s = seq(exps, ctx.alpha());
    const auto small = omega_coverage(ctx, s, BudgetSeq{lam});
    const auto large = omega_coverage(ctx, s, BudgetSeq{bigger});
    CHECK(small.contains(0));
    CHECK(small.negated() == small);
    CHECK(small.subset_of(large));
  }
}

TEST_CASE("seq_weight examples") {
  const auto ctx = build_context(30, 7);
  const auto a = seq_weight(ctx, seq({1, 0}, 4));
  CHECK(a.weight == 5);
  CHECK(a.witness == BudgetSeq{{2, 3}});
  CHECK(seq_weight(ctx, seq({3, 0}, 4)).weight == 5);
  CHECK(seq_weight(ctx, seq({2, 0}, 4)).weight == 6);
  for (std::int64_t n : {3, 4, 10, 31, 64, 101}) CHECK(seq_weight(build_context(n, 1), seq({0}, 1)).weight == n / 2);
  CHECK(seq_weight(build_context(13, 2), seq({0}, 12)).weight == 6);
}

TEST_CASE("seq_weight matches the composition oracle") {
  const std::pair<std::int64_t, std::int64_t> units[] = {{30, 7}, {13, 2}, {11, 2}, {20, 3}, {21, 2}, {17, 3}};
  for (const auto& [n, k] : units) {
    const auto ctx = build_context(n, k);
    for (std::int64_t top = 1; top < std::min<std::int64_t>(ctx.alpha(), 4); ++top)
      for (std::int64_t mid = 0; mid < top; ++mid) {
        std::vector<std::int64_t> e{top, mid};
        if (mid > 0) e.push_back(0);
        const auto got = seq_weight(ctx, seq(e, ctx.alpha()));
        CHECK(got.weight == naive_weight(n, k, e));
        CHECK(omega_coverage(ctx, seq(e, ctx.alpha()), got.witness).full());
        CHECK(got.witness.weight() == got.weight);
      }
  }
}

TEST_CASE("witness is the lexicographically smallest minimiser") {
  const auto ctx = build_context(30, 7);
  const auto s = seq({3, 0}, 4);
  const auto w = seq_weight(ctx, s);
  for (std::int64_t a = 0; a <= w.weight; ++a) {
    const BudgetSeq b{{a, w.weight - a}};
    if (omega_coverage(ctx, s, b).full()) {
      CHECK(b == w.witness);
      break;
    }
  }
}

TEST_CASE("covering_budget_within and search budget") {
  const auto ctx = build_context(30, 7);
  CHECK_FALSE(covering_budget_within(ctx, seq({1, 0}, 4), 4).has_value());
  CHECK(covering_budget_within(ctx, seq({1, 0}, 4), 5) == BudgetSeq{{2, 3}});
  SearchLimits tight{3};
  try {
    alpha_weight(build_context(61, 2), tight);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget);
  }
}

TEST_CASE("level_weight examples") {
  const auto ctx = build_context(30, 7);
  // Oracle: minimum over the reduced length-2 sequences (j, 0).
  std::int64_t oracle = 1000;
  for (std::int64_t j = 1; j < 4; ++j) oracle = std::min(oracle, naive_weight(30, 7, {j, 0}));
  CHECK(oracle == 5);
  const auto l2 = level_weight(ctx, 2);
  CHECK(l2.weight == oracle);
  CHECK(l2.sequence == seq({1, 0}, 4));
  // Level 3 is below the value 5 quoted for wt(30,7;3) alongside the (30,7) table.
  const auto l3 = level_weight(ctx, 3);
  CHECK(l3.weight == 4);
  CHECK(omega_coverage(ctx, l3.sequence, l3.witness).full());

  for (const auto& [n, k] : {std::pair{7, 3}, std::pair{13, 2}, std::pair{30, 7}})
    CHECK(level_weight(build_context(n, k), 1).weight == n / 2);

  const auto l = level_weight(build_context(13, 2), 3);
  CHECK(l.weight == 3);
  CHECK(omega_coverage(build_context(13, 2), l.sequence, l.witness).full());
  // The printed witness 1,1,1 on (2,1,0) also covers.
  CHECK(omega_coverage(build_context(13, 2), seq({2, 1, 0}, 12), BudgetSeq{{1, 1, 1}}).full());

  CHECK_THROWS(level_weight(ctx, 0));
  CHECK_THROWS(level_weight(ctx, 5));
}

TEST_CASE("alpha_weight examples") {
  CHECK(alpha_weight(build_context(13, 2)).weight == 3);
  CHECK(alpha_weight(build_context(7, 3)).weight == 2);
  CHECK(alpha_weight(build_context(61, 2)).weight == 4);
  const auto w = alpha_weight(build_context(30, 7));
  CHECK(w.weight == 4);
  CHECK(w.witness == BudgetSeq{{0, 2, 1, 1}});
  CHECK(alpha_weight(build_context(9, 1)).weight == 4);
}

TEST_CASE("dual examples") {
  CHECK(dual(seq({3, 1, 0}, 4)) == seq({2, 1, 0}, 4));
  CHECK(dual(seq({1, 0}, 4)) == seq({3, 0}, 4));
  CHECK(dual(ExponentSeq::full(6)) == ExponentSeq::full(6));
  CHECK(dual(seq({2}, 4)) == seq({0}, 4));
}

TEST_CASE("codual examples") {
  CHECK(codual(seq({3, 1, 0}, 4)) == seq({3, 2, 0}, 4));
  CHECK(codual(seq({1, 0}, 4)) == seq({3, 0}, 4));
  for (std::int64_t a = 1; a <= 8; ++a) CHECK(codual(ExponentSeq::full(a)) == ExponentSeq::full(a));
  CHECK_THROWS(codual(seq({2, 1}, 4)));
}

TEST_CASE("refines examples") {
  CHECK(refines(seq({1, 0}, 4), seq({3, 1, 0}, 4)));
  CHECK_FALSE(refines(seq({2, 0}, 4), seq({3, 1, 0}, 4)));
  CHECK(refines(seq({2, 0}, 4), seq({2, 0}, 4)));
  for (const auto& s : {seq({0}, 4), seq({3, 1}, 4), seq({2, 1, 0}, 4)}) CHECK(refines(s, ExponentSeq::full(4)));
  CHECK_THROWS(refines(seq({0}, 4), seq({0}, 5)));
}

TEST_CASE("minimal prime sequences of (30,7)") {
  const auto ctx = build_context(30, 7);
  const auto r = minimal_prime_sequences(ctx);
  CHECK(r.weight == 4);
  CHECK_FALSE(r.truncated);
  const std::set<ExponentSeq> got(r.sequences.begin(), r.sequences.end());
  const std::set<ExponentSeq> want{seq({3, 2, 0}, 4), seq({3, 1, 0}, 4), seq({2, 1, 0}, 4)};
  CHECK(got == want);
  CHECK(r.deg_alpha == 2);
  // (1,0) and (3,0) have weight 5, so they do not realise wt(30,7;alpha) = 4.
  CHECK(seq_weight(ctx, seq({1, 0}, 4)).weight == 5);
  CHECK(seq_weight(ctx, seq({3, 0}, 4)).weight == 5);
}

TEST_CASE("minimal prime sequences: degenerate and prime cases") {
  const auto one = minimal_prime_sequences(build_context(11, 1));
  CHECK(one.sequences == std::vector<ExponentSeq>{seq({0}, 1)});
  CHECK(one.deg_alpha == 0);

  const auto ctx = build_context(13, 2);
  const auto r = minimal_prime_sequences(ctx);
  CHECK(r.deg_alpha <= 6);
  CHECK(r.deg_alpha == 2);
  for (const auto& s : r.sequences) {
    CHECK(s.reduced());
    CHECK(seq_weight(ctx, s).weight == r.weight);
    // Dropping any non-trailing entry raises the weight.
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
      std::vector<std::int64_t> e(s.entries().begin(), s.entries().end());
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
      CHECK(seq_weight(ctx, seq(e, 12)).weight > r.weight);
    }
  }

  MinimalPrimeOptions capped;
  capped.max_length = 1;
  CHECK(minimal_prime_sequences(ctx, capped).truncated);
}

TEST_CASE("primal_reduce examples") {
  const auto ctx = build_context(30, 7);
  const FormalSum not_primal{{{1, 2}, {-1, 2}, {1, 1}, {1, 0}}};
  CHECK_FALSE(not_primal.is_primal(4));
  const auto r = primal_reduce(ctx, not_primal);
  CHECK(r.is_primal(4));
  CHECK(r.compact() == FormalSum{{{1, 1}, {1, 0}}});
  CHECK(r.acs() == 2);
  CHECK(r.value(ctx) == not_primal.value(ctx));

  const FormalSum primal{{{1, 2}, {0, 2}, {1, 1}, {1, 0}}};
  CHECK(primal.is_primal(4));
  CHECK(primal_reduce(ctx, primal) == primal);

  const FormalSum empty;
  CHECK(primal_reduce(ctx, empty).terms.empty());
  CHECK(empty.value(ctx) == 0);
}

TEST_CASE("primal_reduce collapses exponents modulo alpha") {
  const auto ctx = build_context(13, 2);
  const FormalSum s{{{5, 13}, {4, 1}}};  // 5 k^13 + 4 k = 9 k
  const auto r = primal_reduce(ctx, s);
  CHECK(r.is_primal(12));
  CHECK(r.value(ctx) == s.value(ctx));
  CHECK(r.acs() <= seq_weight(ctx, seq({1}, 12)).weight);
}

TEST_CASE("min_acs_representation") {
  const auto ctx = build_context(30, 7);
  const auto s = seq({1, 0}, 4);
  for (Residue v = 0; v < 30; ++v) {
    const auto c = min_acs_representation(ctx, s, v);
    CHECK(mod(c[0] * 7 + c[1], 30) == v);
    CHECK(std::abs(c[0]) + std::abs(c[1]) <= 5);
  }
}

TEST_CASE("weight cache round trip, replay and version filtering") {
  const auto dir = std::filesystem::temp_directory_path() / "metacyclic_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "weights.jsonl";
  std::filesystem::remove(path);

  const WeightRecord good{30, 7, "seq:(1,0)", {1, 0}, 5, {2, 3}, std::string(kToolVersion)};
  CHECK(replay_valid(good));
  CHECK(parse_record(to_json_line(good)) == good);
  WeightRecord bad = good;
  bad.witness = {1, 3};
  bad.weight = 4;
  CHECK_FALSE(replay_valid(bad));

  {
    WeightCache cache(path);
    cache.store(good);
    CHECK(cache.lookup(30, 7, "seq:(1,0)") == good);
  }
  {
    std::ofstream out(path, std::ios::app);
    WeightRecord old = good;
    old.key = "alpha";
    old.tool_version = "0.0.1";
    out << to_json_line(old) << "\n" << "not json\n";
  }
  WeightCache reloaded(path);
  CHECK(reloaded.lookup(30, 7, "seq:(1,0)") == good);
  CHECK_FALSE(reloaded.lookup(30, 7, "alpha").has_value());
  CHECK(reloaded.ignored_lines() == 2);

  // Concurrent readers alongside one writer.
  std::vector<std::thread> readers;
  std::atomic<int> hits{0};
  for (int t = 0; t < 4; ++t)
    readers.emplace_back([&] {
      for (int i = 0; i < 200; ++i)
        if (reloaded.lookup(30, 7, "seq:(1,0)")) ++hits;
    });
  WeightRecord other{13, 2, "alpha", {11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0}, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2},
                     std::string(kToolVersion)};
  reloaded.store(other);
  for (auto& t : readers) t.join();
  CHECK(hits == 800);
  CHECK(WeightCache(path).lookup(13, 2, "alpha") == other);
  reloaded.clear();
  CHECK(WeightCache(path).records().empty());
}
