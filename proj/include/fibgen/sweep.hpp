#pragma once

// Grid evaluation over (n, d) rectangles, the seven-row threshold table, and
// the unpruned brute-force oracle the acceptance suite diffs against.

#include <cstdint>
#include <string>
#include <vector>

#include "fibgen/bounds.hpp"

namespace fibgen::sweep {

// One (n, d) point of a sweep with its best combined bound.
struct GridCell {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t best_lower = 0;
  CertKind best_kind = CertKind::ClosedForm;
  std::int64_t upper_genus = 0;
  double closed_form = 0.0;
};

struct GridRect {
  std::int64_t n_min = 3, n_max = 3;
  std::int64_t d_min = 1, d_max = 1;
  std::int64_t cell_count() const {
    return (n_max - n_min + 1) * (d_max - d_min + 1);
  }
};

/// One cell per (n, d) in the rectangle, row-major (n outer, d inner).
/// A positive sieve_limit overrides the default prime-search limit.
std::vector<GridCell> grid(const GridRect& rect, std::int64_t sieve_limit = 0);

// One row of the guaranteed-bound table: for the row's prime p, degrees
// d >= p*ceil((n+offset)/(p+1)) have fib.gen >= guaranteed_fibgen, and the
// threshold grows like n*p/(p+1).
struct TableRow {
  std::int64_t guaranteed_fibgen = 0;
  std::int64_t prime = 0;
  std::int64_t asymptotic_num = 0;  // asymptotic degree ratio p/(p+1)
  std::int64_t asymptotic_den = 0;
  std::int64_t threshold_prime = 0;  // exact threshold p*ceil((n+offset)/(p+1))
  std::int64_t threshold_offset = 0;
};

/// The seven rows for the first seven primes admitting a smoothness
/// guarantee, derived from the Tate threshold and the conic-bundle remark.
std::vector<TableRow> intro_table();

// Oracle results carry doubled values for the degeneration bound (half
// integers become integers) and plain integers for the threshold bound.
struct DegOracleResult {
  bool present = false;
  std::int64_t doubled_value = 0;
  std::int64_t p = 0;
  std::int64_t e = 0;
};

struct ThrOracleResult {
  bool present = false;
  std::int64_t value = 0;
  std::int64_t p = 0;
  std::int64_t g = 0;
};

/// Unpruned enumeration of every integer p <= d (primality by trial
/// division) and every e <= d; independent of the optimized search.
DegOracleResult oracle_degeneration(std::int64_t n, std::int64_t d);

/// Unpruned enumeration of every g <= d and every prime p <= d, plus the
/// conic-bundle fallback.
ThrOracleResult oracle_threshold(std::int64_t n, std::int64_t d);

struct Discrepancy {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::string message;
};

/// Diffs the optimized searches against the oracle on the full rectangle
/// 3 <= n <= n_max, 1 <= d <= d_max. Expected empty.
std::vector<Discrepancy> oracle_check(std::int64_t n_max, std::int64_t d_max);

}  // namespace fibgen::sweep
