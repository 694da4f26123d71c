#pragma once

// Reference tables of wt(p, k; p-1), diameters and bounds for G_{p-1,p,k},
// and the (n, k) = (30, 7) coverage example, with recomputation and checking.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metacyclic/omega.hpp"

namespace metacyclic {

struct TableRow {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Residue k = 0;
  std::int64_t wt = 0;
  // Budgets by ascending exponent: entry j bounds the coefficient of k^j.
  std::vector<std::int64_t> lambda;
  std::int64_t diam = 0;
  std::int64_t bound = 0;  // [m/2] + wt
};

std::span<const TableRow> golden_primes_1mod4();
std::span<const TableRow> golden_primes_3mod4();
// "primes-1mod4" or "primes-3mod4"; throws on anything else.
std::span<const TableRow> golden_table(std::string_view which);

// The sequence (L-1, ..., 1, 0) and the matching budgets for an ascending lambda of length L.
std::pair<ExponentSeq, BudgetSeq> ascending_budget(const UnitContext& ctx, std::span<const std::int64_t> lambda);
bool lambda_covers(const UnitContext& ctx, std::span<const std::int64_t> lambda);

TableRow compute_table_row(std::int64_t m, std::int64_t n, Residue k, const SearchLimits& limits = {});

struct RowCheck {
  TableRow computed;
  std::vector<std::string> mismatches;  // empty when the row agrees with its golden
  bool ok() const { return mismatches.empty(); }
};

RowCheck check_table_row(const TableRow& golden, const TableRow& computed);

// Header m,n,k,wt,lambda,diam,bound; lambda entries are separated by ';'.
void write_table_csv(std::ostream& out, std::span<const TableRow> rows);
std::vector<TableRow> parse_table_csv(std::istream& in);

struct OmegaExampleRow {
  int label = 0;  // 1, 2, 3 for the sequences (1,0), (2,0), (3,0)
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
};

// Every (lambda_1, lambda_2) listed for (n, k) = (30, 7), ranges expanded.
std::span<const OmegaExampleRow> golden_omega_example();
// Printed minima of the three sequences: 5, 6, 5.
std::span<const std::int64_t> golden_omega_minima();
ExponentSeq omega_example_sequence(int label);

struct OmegaExampleCheck {
  std::vector<std::string> mismatches;
  std::vector<SeqWeight> minima;  // computed seq_weight of (1,0), (2,0), (3,0)
  bool ok() const { return mismatches.empty(); }
};

// Header kind,sequence,lambda,weight,covers with kind "row" for listed rows and "minimum" per sequence.
OmegaExampleCheck write_omega_example(std::ostream& out);

}  // namespace metacyclic
