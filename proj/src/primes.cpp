#include "fibgen/primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fibgen {

namespace {

// The problem domain never needs primes beyond ~10^7; this guard only
// protects against absurd requests.
constexpr std::int64_t kMaxSieveLimit = std::int64_t{1} << 31;

std::atomic<std::int64_t> g_sieve_override{0};

}  // namespace

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
  if (limit_ < 2) return;
  if (limit_ > kMaxSieveLimit)
    throw std::invalid_argument("PrimeTable: limit too large to sieve");
  std::vector<std::uint8_t> composite(static_cast<std::size_t>(limit_) + 1, 0);
  for (std::int64_t i = 2; i * i <= limit_; ++i)
    if (!composite[static_cast<std::size_t>(i)])
      for (std::int64_t j = i * i; j <= limit_; j += i)
        composite[static_cast<std::size_t>(j)] = 1;
  for (std::int64_t i = 2; i <= limit_; ++i)
    if (!composite[static_cast<std::size_t>(i)]) primes_.push_back(i);
}

bool PrimeTable::contains(std::int64_t x) const {
  if (x > limit_)
    throw std::out_of_range("PrimeTable::contains: value beyond sieve limit");
  return std::binary_search(primes_.begin(), primes_.end(), x);
}

std::optional<std::int64_t> PrimeTable::next_at_least(std::int64_t x) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), x);
  if (it == primes_.end()) return std::nullopt;
  return *it;
}

PrimeTable primes_up_to(std::int64_t limit) { return PrimeTable(limit); }

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0 || x % 3 == 0) return false;
  for (std::int64_t i = 5; i * i <= x; i += 6)
    if (x % i == 0 || x % (i + 2) == 0) return false;
  return true;
}

std::optional<std::int64_t> prime_in_bertrand_interval(double theta,
                                                       const PrimeTable& table) {
  if (!(theta > 0))
    throw std::domain_error("prime_in_bertrand_interval: theta must be positive");
  const auto hi = static_cast<std::int64_t>(std::floor(theta));
  if (hi < 2) return std::nullopt;
  if (table.limit() < hi)
    throw std::invalid_argument("prime_in_bertrand_interval: table too small");
  auto lo = static_cast<std::int64_t>(std::ceil(theta / 2.0));
  if (lo < 2) lo = 2;
  const auto p = table.next_at_least(lo);
  if (p && *p <= hi) return p;
  return std::nullopt;
}

std::optional<std::int64_t> prime_in_bertrand_interval(double theta) {
  if (!(theta > 0))
    throw std::domain_error("prime_in_bertrand_interval: theta must be positive");
  const auto hi = static_cast<std::int64_t>(std::floor(theta));
  return prime_in_bertrand_interval(theta, PrimeTable(std::max<std::int64_t>(hi, 0)));
}

void set_sieve_limit_override(std::int64_t limit) {
  g_sieve_override.store(limit > 0 ? limit : 0);
}

std::optional<std::int64_t> sieve_limit_override() {
  const auto v = g_sieve_override.load();
  if (v > 0) return v;
  return std::nullopt;
}

}  // namespace fibgen
