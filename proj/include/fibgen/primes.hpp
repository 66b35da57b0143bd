#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fibgen {

// All primes up to a fixed limit, strictly ascending.
class PrimeTable {
 public:
  explicit PrimeTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  std::span<const std::int64_t> primes() const { return primes_; }

  /// Membership; callers must stay within the sieved range.
  bool contains(std::int64_t x) const;

  /// Smallest listed prime >= x, if any.
  std::optional<std::int64_t> next_at_least(std::int64_t x) const;

 private:
  std::int64_t limit_ = 0;
  std::vector<std::int64_t> primes_;
};

/// Sieve of Eratosthenes; a limit below 2 yields an empty table.
PrimeTable primes_up_to(std::int64_t limit);

/// Trial division, for values too incidental to deserve a sieve.
bool is_prime(std::int64_t x);

/// Smallest prime p with theta/2 <= p <= theta, i.e. in
/// [ceil(theta/2), floor(theta)]. Guaranteed non-absent for theta >= 2 by
/// Bertrand's postulate; absent for theta < 2.
std::optional<std::int64_t> prime_in_bertrand_interval(double theta);
std::optional<std::int64_t> prime_in_bertrand_interval(double theta,
                                                       const PrimeTable& table);

// Process-wide override of the sieve limit used by the bound searches
// (FIBGEN_SIEVE_LIMIT in the CLI). Set once at startup, before any search
// runs; 0 clears. Setting it below the default limit truncates prime
// searches, which is the caller's explicit choice.
void set_sieve_limit_override(std::int64_t limit);
std::optional<std::int64_t> sieve_limit_override();

}  // namespace fibgen
