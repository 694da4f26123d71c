#include "metacyclic/tables.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "metacyclic/error.hpp"
#include "metacyclic/group.hpp"

namespace metacyclic {

namespace {

// wt(p,k;p-1) for primes p == 1 (mod 4), m = p - 1.
const std::vector<TableRow> kPrimes1Mod4 = {
    {12, 13, 2, 3, {1, 1, 1}, 7, 9},
    {16, 17, 3, 3, {0, 1, 1, 1}, 9, 11},
    {28, 29, 2, 4, {0, 0, 0, 1, 1, 1, 1}, 15, 18},
    {36, 37, 2, 4, {0, 0, 0, 1, 0, 0, 1, 1, 1}, 19, 22},
    {40, 41, 6, 4, {0, 0, 0, 0, 1, 0, 1, 0, 1, 1}, 21, 24},
    {52, 53, 2, 4, {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1}, 27, 30},
    {60, 61, 2, 4, {0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1}, 31, 34},
};

// Same for p == 3 (mod 4). The printed tuple "(42 43, 3)" is read as (42, 43, 3).
const std::vector<TableRow> kPrimes3Mod4 = {
    {6, 7, 3, 2, {0, 1, 1}, 4, 5},
    {10, 11, 2, 3, {0, 0, 1, 2}, 6, 8},
    {18, 19, 2, 3, {0, 1, 0, 0, 1, 1}, 10, 12},
    {22, 23, 5, 3, {1, 0, 0, 0, 0, 1, 1}, 12, 14},
    {30, 31, 3, 4, {0, 0, 0, 0, 0, 0, 1, 1, 2}, 16, 19},
    {42, 43, 3, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2}, 22, 25},
    {46, 47, 5, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}, 24, 27},
    {58, 59, 2, 4, {0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1}, 30, 33},
};

std::vector<OmegaExampleRow> expand_omega_rows() {
  // (label, lambda_1 first, lambda_1 last, lambda_2) as listed for (30, 7).
  const int listed[][4] = {
      {1, 0, 0, 15}, {1, 1, 1, 8},  {1, 2, 2, 3}, {1, 3, 3, 3},  {1, 4, 5, 2},  {1, 6, 14, 1}, {1, 15, 15, 0},
      {2, 0, 0, 15}, {2, 1, 1, 5},  {2, 2, 3, 4}, {2, 4, 4, 2},  {2, 5, 14, 1}, {2, 15, 15, 0},
      {3, 0, 0, 15}, {3, 1, 1, 6},  {3, 2, 2, 4}, {3, 3, 7, 2},  {3, 8, 14, 1}, {3, 15, 15, 0},
  };
  std::vector<OmegaExampleRow> rows;
  for (const auto& r : listed)
    for (int l1 = r[1]; l1 <= r[2]; ++l1) rows.push_back({r[0], l1, r[3]});
  return rows;
}

const std::vector<OmegaExampleRow> kOmegaRows = expand_omega_rows();
const std::int64_t kOmegaMinima[] = {5, 6, 5};

std::string join(std::span<const std::int64_t> v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::int64_t> split_ints(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size()) fail(ErrorKind::validation, "malformed integer: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::span<const TableRow> golden_primes_1mod4() { return kPrimes1Mod4; }
std::span<const TableRow> golden_primes_3mod4() { return kPrimes3Mod4; }

std::span<const TableRow> golden_table(std::string_view which) {
  if (which == "primes-1mod4") return golden_primes_1mod4();
  if (which == "primes-3mod4") return golden_primes_3mod4();
  fail(ErrorKind::validation, "unknown table: " + std::string(which));
}

std::pair<ExponentSeq, BudgetSeq> ascending_budget(const UnitContext& ctx, std::span<const std::int64_t> lambda) {
  if (lambda.empty() || static_cast<std::int64_t>(lambda.size()) > ctx.alpha())
    fail(ErrorKind::validation, "lambda length must lie in [1, alpha]");
  std::vector<std::int64_t> exps;
  std::vector<std::int64_t> budget;
  for (std::size_t j = lambda.size(); j-- > 0;) {
    exps.push_back(static_cast<std::int64_t>(j));
    budget.push_back(lambda[j]);
  }
  return {ExponentSeq(std::move(exps), ctx.alpha()), BudgetSeq{std::move(budget)}};
}

bool lambda_covers(const UnitContext& ctx, std::span<const std::int64_t> lambda) {
  const auto [seq, budget] = ascending_budget(ctx, lambda);
  return omega_coverage(ctx, seq, budget).full();
}

TableRow compute_table_row(std::int64_t m, std::int64_t n, Residue k, const SearchLimits& limits) {
  const SplitPresentation group(m, n, k);
  const auto& ctx = group.context();
  const auto w = alpha_weight(ctx, limits);
  TableRow row{m, n, k, w.weight, {}, all_norms(group).diameter, m / 2 + w.weight};
  // The witness is over alpha-1, ..., 0; list it by ascending exponent without trailing zeros.
  row.lambda.assign(w.witness.bounds.rbegin(), w.witness.bounds.rend());
  while (row.lambda.size() > 1 && row.lambda.back() == 0) row.lambda.pop_back();
  return row;
}

RowCheck check_table_row(const TableRow& golden, const TableRow& computed) {
  RowCheck check{computed, {}};
  auto expect = [&](const char* what, std::int64_t want, std::int64_t got) {
    if (want != got)
      check.mismatches.push_back(std::string(what) + ": expected " + std::to_string(want) + ", got " +
                                 std::to_string(got));
  };
  expect("wt", golden.wt, computed.wt);
  expect("diam", golden.diam, computed.diam);
  expect("bound", golden.bound, computed.bound);
  const UnitContext ctx = build_context(golden.n, golden.k);
  if (!lambda_covers(ctx, computed.lambda)) check.mismatches.push_back("computed lambda does not cover");
  const std::int64_t computed_sum = BudgetSeq{computed.lambda}.weight();
  if (computed_sum != computed.wt) check.mismatches.push_back("computed lambda does not sum to wt");
  if (!lambda_covers(ctx, golden.lambda)) check.mismatches.push_back("printed lambda does not cover");
  if (BudgetSeq{golden.lambda}.weight() != golden.wt) check.mismatches.push_back("printed lambda does not sum to wt");
  if (computed.diam > computed.bound) check.mismatches.push_back("diam exceeds bound");
  return check;
}

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
  out << "m,n,k,wt,lambda,diam,bound\n";
  for (const auto& r : rows)
    out << r.m << ',' << r.n << ',' << r.k << ',' << r.wt << ',' << join(r.lambda, ';') << ',' << r.diam << ','
        << r.bound << '\n';
}

std::vector<TableRow> parse_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "m,n,k,wt,lambda,diam,bound")
    fail(ErrorKind::validation, "table CSV must start with header m,n,k,wt,lambda,diam,bound");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) fail(ErrorKind::validation, "table CSV row needs 7 cells: " + line);
    auto one = [](const std::string& c) {
      const auto v = split_ints(c, ';');
      if (v.size() != 1) fail(ErrorKind::validation, "expected one integer: " + c);
      return v[0];
    };
    rows.push_back({one(cells[0]), one(cells[1]), one(cells[2]), one(cells[3]), split_ints(cells[4], ';'),
                    one(cells[5]), one(cells[6])});
  }
  return rows;
}

std::span<const OmegaExampleRow> golden_omega_example() { return kOmegaRows; }
std::span<const std::int64_t> golden_omega_minima() { return kOmegaMinima; }

ExponentSeq omega_example_sequence(int label) {
  if (label < 1 || label > 3) fail(ErrorKind::validation, "omega example sequence label must be 1, 2 or 3");
  return ExponentSeq({label, 0}, 4);
}

OmegaExampleCheck write_omega_example(std::ostream& out) {
  const UnitContext ctx = build_context(30, 7);
  OmegaExampleCheck check;
  out << "kind,sequence,lambda,weight,covers\n";
  for (const auto& row : kOmegaRows) {
    const ExponentSeq seq = omega_example_sequence(row.label);
    const BudgetSeq budget{{row.lambda1, row.lambda2}};
    const bool covers = omega_coverage(ctx, seq, budget).full();
    out << "row," << join(seq.entries(), ';') << ',' << join(budget.bounds, ';') << ',' << budget.weight() << ','
        << (covers ? 1 : 0) << '\n';
    if (!covers)
      check.mismatches.push_back("sequence " + seq.to_string() + " with lambda " + budget.to_string() +
                                 " does not cover");
  }
  for (int label = 1; label <= 3; ++label) {
    const ExponentSeq seq = omega_example_sequence(label);
    check.minima.push_back(seq_weight(ctx, seq));
    const auto& w = check.minima.back();
    out << "minimum," << join(seq.entries(), ';') << ',' << join(w.witness.bounds, ';') << ',' << w.weight << ",1\n";
    const std::int64_t want = kOmegaMinima[label - 1];
    if (w.weight != want)
      check.mismatches.push_back("minimum over " + seq.to_string() + ": expected " + std::to_string(want) +
                                 ", got " + std::to_string(w.weight));
  }
  return check;
}

}  // namespace metacyclic
