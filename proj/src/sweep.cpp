#include "fibgen/sweep.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace fibgen::sweep {

namespace {

// The oracle keeps its own primality decisions so it shares nothing with the
// sieve-backed searches it checks.
std::vector<std::uint8_t> trial_prime_bitmap(std::int64_t max) {
  std::vector<std::uint8_t> prime(static_cast<std::size_t>(std::max<std::int64_t>(max, 1)) + 1, 0);
  for (std::int64_t x = 2; x <= max; ++x) {
    bool is_p = true;
    for (std::int64_t q = 2; q * q <= x; ++q)
      if (x % q == 0) {
        is_p = false;
        break;
      }
    prime[static_cast<std::size_t>(x)] = is_p ? 1 : 0;
  }
  return prime;
}

DegOracleResult oracle_degeneration_impl(std::int64_t n, std::int64_t d,
                                         const std::vector<std::uint8_t>& prime) {
  DegOracleResult best;
  for (std::int64_t p = 2; p <= d; ++p) {
    if (!prime[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t e = 1; e <= d; ++e) {
      if (p * e > d) continue;
      const std::int64_t g = p * e + e - n - 1;
      if (g < 2) continue;
      const std::int64_t v2 = std::min(p - 2, 2 * (2 * g - 1));
      if (!best.present || v2 > best.doubled_value) best = {true, v2, p, e};
    }
  }
  return best;
}

ThrOracleResult oracle_threshold_impl(std::int64_t n, std::int64_t d,
                                      const std::vector<std::uint8_t>& prime) {
  ThrOracleResult best;
  for (std::int64_t g = 1; g <= d; ++g) {
    for (std::int64_t p = 2; p <= d; ++p) {
      if (!prime[static_cast<std::size_t>(p)] || p < 2 * g + 3) continue;
      const std::int64_t off = (g + 5) / 2;
      const std::int64_t t = p * ((n + off + p) / (p + 1));
      if (d >= t) {
        best = {true, g + 1, p, g};  // g ascends; first p is the smallest
        break;
      }
    }
  }
  if (!best.present && d >= 3 * ((n + 6) / 4)) best = {true, 1, 3, 0};
  return best;
}

std::int64_t doubled_rat(const Rat& v) {
  // degeneration values are half-integers
  return 2 / v.den() * v.num();
}

}  // namespace

std::vector<GridCell> grid(const GridRect& rect, std::int64_t sieve_limit) {
  if (rect.n_min < 3 || rect.n_min > rect.n_max || rect.d_min < 1 ||
      rect.d_min > rect.d_max)
    throw std::invalid_argument(
        "grid: invalid rectangle (need 3 <= n_min <= n_max and "
        "1 <= d_min <= d_max)");
  const std::int64_t limit =
      sieve_limit > 0 ? sieve_limit
                      : bound_search_sieve_limit(rect.n_max, rect.d_max);
  const PrimeTable table(limit);
  std::vector<GridCell> cells;
  cells.reserve(static_cast<std::size_t>(rect.cell_count()));
  for (std::int64_t n = rect.n_min; n <= rect.n_max; ++n) {
    for (std::int64_t d = rect.d_min; d <= rect.d_max; ++d) {
      const Hypersurface h(n, d);
      const Report rep = combined_bound(h, table);
      double cf = 0.0;
      for (const auto& c : rep.certificates)
        if (c.kind == CertKind::ClosedForm) cf = c.value_as_double();
      cells.push_back(
          {n, d, rep.best_lower, rep.best_kind, rep.upper_genus, cf});
    }
  }
  return cells;
}

std::vector<TableRow> intro_table() {
  const PrimeTable table(64);
  std::vector<TableRow> rows;
  for (const std::int64_t p : table.primes()) {
    if (rows.size() == 7) break;
    // p = 2 admits no smoothness guarantee even at genus 0.
    if (!tate_smooth_guarantee(0, p)) continue;
    std::int64_t g = 0;
    while (tate_smooth_guarantee(g + 1, p)) ++g;
    const std::int64_t r = g >= 1 ? (g + 3) / 2 : 2;
    rows.push_back({g + 1, p, p, p + 1, p, r + 1});
  }
  return rows;
}

DegOracleResult oracle_degeneration(std::int64_t n, std::int64_t d) {
  return oracle_degeneration_impl(n, d, trial_prime_bitmap(d));
}

ThrOracleResult oracle_threshold(std::int64_t n, std::int64_t d) {
  return oracle_threshold_impl(n, d, trial_prime_bitmap(d));
}

std::vector<Discrepancy> oracle_check(std::int64_t n_max, std::int64_t d_max) {
  std::vector<Discrepancy> out;
  const auto prime = trial_prime_bitmap(d_max);
  const PrimeTable table(bound_search_sieve_limit(n_max, d_max));
  for (std::int64_t n = 3; n <= n_max; ++n) {
    for (std::int64_t d = 1; d <= d_max; ++d) {
      const Hypersurface h(n, d);

      const auto deg_o = oracle_degeneration_impl(n, d, prime);
      const auto deg_i = best_degeneration_bound(h, table);
      if (deg_o.present != deg_i.has_value()) {
        out.push_back({n, d, "degeneration presence mismatch"});
      } else if (deg_i) {
        const auto& w = std::get<DegenerationWitness>(deg_i->witness);
        if (doubled_rat(std::get<Rat>(deg_i->value)) != deg_o.doubled_value)
          out.push_back({n, d, "degeneration value mismatch"});
        else if (w.p != deg_o.p || w.e != deg_o.e)
          out.push_back({n, d, "degeneration witness mismatch"});
      }

      const auto thr_o = oracle_threshold_impl(n, d, prime);
      const auto thr_i = best_threshold_bound(h, table);
      if (thr_o.present != thr_i.has_value()) {
        out.push_back({n, d, "threshold presence mismatch"});
      } else if (thr_i) {
        const auto& w = std::get<ThresholdWitness>(thr_i->witness);
        if (thr_i->integer_value != thr_o.value)
          out.push_back({n, d, "threshold value mismatch"});
        else if (w.p != thr_o.p || w.g != thr_o.g)
          out.push_back({n, d, "threshold witness mismatch"});
      }
    }
  }
  return out;
}

}  // namespace fibgen::sweep
