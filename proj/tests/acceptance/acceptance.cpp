// Acceptance harness: one PASS/FAIL line per criterion. Arguments select
// criteria by number (1..8); none runs all. Exit status is 0 only if every
// selected criterion passes. All tolerances are exact (0).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "metacyclic/bounds.hpp"
#include "metacyclic/group.hpp"
#include "metacyclic/omega.hpp"
#include "metacyclic/tables.hpp"
#include "metacyclic/verify.hpp"

using namespace metacyclic;

namespace {

struct Expected {
  std::int64_t m, n, k, wt, diam, bound;
};

// Published values for G_{p-1,p,k}.
const Expected kRows[] = {
    {12, 13, 2, 3, 7, 9},    {16, 17, 3, 3, 9, 11},   {28, 29, 2, 4, 15, 18}, {36, 37, 2, 4, 19, 22},
    {40, 41, 6, 4, 21, 24},  {52, 53, 2, 4, 27, 30},  {60, 61, 2, 4, 31, 34}, {6, 7, 3, 2, 4, 5},
    {10, 11, 2, 3, 6, 8},    {18, 19, 2, 3, 10, 12},  {22, 23, 5, 3, 12, 14}, {30, 31, 3, 4, 16, 19},
    {42, 43, 3, 4, 22, 25},  {46, 47, 5, 4, 24, 27},  {58, 59, 2, 4, 30, 33},
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string row_name(const Expected& r) {
  return "(" + std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + ")";
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
};

void report(int id, const std::string& title, const Outcome& o, double seconds) {
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(1);
  t << seconds;
  std::cout << "criterion " << id << " " << title << ": " << (o.pass ? "PASS" : "FAIL") << " (" << t.str() << "s)\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
}

void tally_line(Outcome& o, const SuiteReport& r, const std::string& check, const std::string& label) {
  const CheckTally* t = r.find(check);
  if (!t) {
    o.pass = false;
    o.details.push_back(label + ": check '" + check + "' missing");
    return;
  }
  o.details.push_back(label + ": " + std::to_string(t->checked) + " checked, " + std::to_string(t->failed) +
                      " violations");
  for (const auto& c : t->counterexamples) o.details.push_back("  e.g. " + c);
  if (t->failed != 0 || t->checked == 0) o.pass = false;
}

Outcome golden_diameters() {
  Outcome o;
  for (const auto& r : kRows) {
    const auto diam = all_norms(SplitPresentation(r.m, r.n, r.k)).diameter;
    if (diam != r.diam) {
      o.pass = false;
      o.details.push_back(row_name(r) + ": diam " + std::to_string(diam) + ", expected " + std::to_string(r.diam));
    }
  }
  o.details.push_back(std::to_string(std::size(kRows)) + " rows, tolerance 0");
  return o;
}

Outcome golden_weights() {
  Outcome o;
  for (const auto& r : kRows) {
    const auto w = alpha_weight(build_context(r.n, r.k));
    if (w.weight != r.wt) {
      o.pass = false;
      o.details.push_back(row_name(r) + ": wt " + std::to_string(w.weight) + ", expected " + std::to_string(r.wt));
    }
  }
  std::size_t replayed = 0;
  for (const auto& rows : {golden_primes_1mod4(), golden_primes_3mod4()})
    for (const auto& g : rows) {
      ++replayed;
      const auto ctx = build_context(g.n, g.k);
      if (!lambda_covers(ctx, g.lambda) || BudgetSeq{g.lambda}.weight() != g.wt) {
        o.pass = false;
        o.details.push_back("printed lambda of (" + std::to_string(g.m) + "," + std::to_string(g.n) + "," +
                            std::to_string(g.k) + ") does not replay to full coverage at weight wt");
      }
    }
  const auto ctx = build_context(30, 7);
  const std::int64_t minima[] = {5, 6, 5};
  for (int label = 1; label <= 3; ++label) {
    const auto seq = ExponentSeq({label, 0}, 4);
    const auto w = seq_weight(ctx, seq);
    o.details.push_back("(30,7) over " + seq.to_string() + ": " + std::to_string(w.weight) + " with lambda " +
                        w.witness.to_string() + ", expected " + std::to_string(minima[label - 1]));
    if (w.weight != minima[label - 1]) o.pass = false;
  }
  o.details.push_back(std::to_string(std::size(kRows)) + " weights, " + std::to_string(replayed) +
                      " printed lambdas replayed, tolerance 0");
  return o;
}

Outcome bound_columns() {
  Outcome o;
  for (const auto& r : kRows) {
    const auto w = alpha_weight(build_context(r.n, r.k)).weight;
    const auto diam = all_norms(SplitPresentation(r.m, r.n, r.k)).diameter;
    if (r.m / 2 + w != r.bound || diam > r.bound) {
      o.pass = false;
      o.details.push_back(row_name(r) + ": [m/2]+wt " + std::to_string(r.m / 2 + w) + ", expected " +
                          std::to_string(r.bound) + ", diam " + std::to_string(diam));
    }
  }
  o.details.push_back(std::to_string(std::size(kRows)) + " rows, tolerance 0");
  return o;
}

Outcome theorem_sweep() {
  SweepOptions s;
  s.family = "main";
  s.jobs = jobs();
  const auto r = verify_bounds(s);
  Outcome o;
  tally_line(o, r, "main theorem", "n <= 40, m <= 40, m*n <= 5000");
  return o;
}

Outcome weight_properties() {
  SweepOptions s;
  s.jobs = jobs();
  const auto r = verify_props(s);
  Outcome o;
  for (const char* c : {"dual invariance", "codual invariance", "order reversal", "delta anchor", "Delta anchor",
                        "level minima", "alpha_weight = min over levels", "minimal prime sequences", "deg <= alpha/2", "degree/codegree symmetry"})
    tally_line(o, r, c, c);
  return o;
}

Outcome weight_bounds() {
  SweepOptions s;
  s.jobs = jobs();
  Outcome o;
  s.family = "prime_weight";
  tally_line(o, verify_bounds(s), "prime weight bound", "6a odd p <= 61, primitive k");
  s.family = "prime_weight_refined";
  tally_line(o, verify_bounds(s), "prime weight refined bound", "6a refinement where 2 in A or -A");
  s.family = "sandwich";
  tally_line(o, verify_bounds(s), "prime power sandwich", "6b sandwich over (3,2),(3,3),(5,2),(2,4),(2,5)");
  return o;
}

Outcome reduction_oracles() {
  SweepOptions s;
  s.jobs = jobs();
  const auto r = verify_reductions(s);
  Outcome o;
  for (const char* c : {"primal value preserved", "primal acs non-increasing", "primal form"}) tally_line(o, r, c, c);
  tally_line(o, r, "syllable <= ord(k) oracle", "syllable <= alpha equals BFS norm, m*n <= 5000, alpha <= 12");
  return o;
}

Outcome unconditional_claims() {
  SweepOptions s;
  s.jobs = jobs();
  Outcome o;
  s.family = "conjecture";
  tally_line(o, verify_bounds(s), "conjecture (no hypotheses)", "bound without hypotheses, n <= 40, m <= 40");
  s.family = "sandwich";
  tally_line(o, verify_bounds(s), "prime power sandwich", "linear-growth sandwich in the swept range");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > 8) {
      std::cerr << "usage: acceptance [criterion 1..8]...\n";
      return 1;
    }
    wanted.insert(id);
  }
  if (wanted.empty())
    for (int i = 1; i <= 8; ++i) wanted.insert(i);

  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden diameters", golden_diameters},
      {2, "golden weights and lambda replay", golden_weights},
      {3, "bound columns", bound_columns},
      {4, "main theorem sweep", theorem_sweep},
      {5, "weight-machinery properties", weight_properties},
      {6, "prime and prime-power weight bounds", weight_bounds},
      {7, "reduction oracles", reduction_oracles},
      {8, "unconditional claims within the swept range", unconditional_claims},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(c.id, c.title, o, secs);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
