#pragma once

// Test-only oracles, kept independent of the library's factorization and
// tree-search paths: a smallest-prime-factor sieve and a direct
// all-subwords membership check.

#include <cstdint>
#include <vector>

#include "substrime/digits.hpp"
#include "substrime/value.hpp"

namespace oracle {

class Sieve {
 public:
  explicit Sieve(uint32_t limit) : spf_(limit + 1, 0) {
    for (uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      for (uint64_t j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }

  bool is_prime(uint32_t n) const { return n >= 2 && spf_[n] == n; }

  // distinct prime divisor count; call only with n >= 1
  unsigned omega(uint32_t n) const {
    unsigned count = 0;
    while (n > 1) {
      const uint32_t p = spf_[n];
      ++count;
      while (n % p == 0) n /= p;
    }
    return count;
  }

 private:
  std::vector<uint32_t> spf_;
};

// Membership by brute force: evaluate every subword of n and apply the
// predicate through the sieve. n must stay within the sieve range.
inline bool member_omega_at_most(const Sieve& sieve, uint32_t n, unsigned base,
                                 unsigned k) {
  const auto ds = substrime::to_digits(n, base);
  for (const auto& w : substrime::all_subwords(ds)) {
    const auto v = static_cast<uint32_t>(w.value);
    if (v == 0) return false;  // omega(0) = infinity
    if (sieve.omega(v) > k) return false;
  }
  return true;
}

inline bool member_all_prime(const Sieve& sieve, uint32_t n, unsigned base) {
  const auto ds = substrime::to_digits(n, base);
  for (const auto& w : substrime::all_subwords(ds))
    if (!sieve.is_prime(static_cast<uint32_t>(w.value))) return false;
  return true;
}

}  // namespace oracle
