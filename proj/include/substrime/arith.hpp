#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "substrime/value.hpp"

namespace substrime {

// Count of distinct prime divisors, extended to N ∪ {∞}.
// omega(0) = ∞ (every prime divides 0), omega(1) = 0.
class OmegaBound {
 public:
  constexpr OmegaBound() = default;
  static constexpr OmegaBound finite(unsigned k) {
    if (k == kInf) throw std::invalid_argument("omega value too large");
    return OmegaBound{k};
  }
  static constexpr OmegaBound infinity() { return OmegaBound{kInf}; }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr unsigned finite_value() const {
    if (is_infinite()) throw std::logic_error("omega bound is infinite");
    return v_;
  }

  // The sentinel is UINT_MAX, so default ordering puts ∞ above every natural.
  friend constexpr auto operator<=>(OmegaBound, OmegaBound) = default;

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr unsigned kInf = UINT_MAX;
  constexpr explicit OmegaBound(unsigned v) : v_(v) {}
  unsigned v_ = 0;
};

struct PrimePower {
  Value prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete factorization: product of prime^exponent equals n, primes
// strictly increasing. n = 1 has an empty factor list.
struct Factorization {
  Value n = 1;
  std::vector<PrimePower> factors;
};

struct FactorRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

namespace detail {

inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t limit = 1u << 20;
    std::vector<bool> composite(limit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<Value>(a) * b % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for the full 64-bit range: the first twelve
// primes as witnesses cover all n < 3.3 * 10^24.
inline bool miller_rabin64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent-cycle Pollard rho. The polynomial offset c steps deterministically,
// so the factor found for a given n never varies between runs.
inline uint64_t pollard_brent(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t q = 1;
    int power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (mulmod(y, y, n) + c) % n;
      ++lam;
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mulmod(q, diff, n);
      if (lam % 64 == 0 || power == lam) {
        d = gcd64(q, n);
        q = 1;
      }
    }
    if (d != 1 && d != n) return d;
    // cycle hit a fixed point or the batch gcd collapsed to n; retry with
    // the next offset
  }
}

inline void factor_u64(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (miller_rabin64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_brent(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace detail

// Deterministic for all n < 2^64; larger inputs are rejected rather than
// answered probabilistically.
inline bool is_prime(Value n) {
  if (n > kU64Max)
    throw FactorRangeError("primality testing supported only below 2^64");
  return detail::miller_rabin64(static_cast<uint64_t>(n));
}

inline Factorization factorize(Value n) {
  if (n == 0) throw std::invalid_argument("factorize requires n >= 1");
  Factorization f;
  f.n = n;
  if (n == 1) return f;

  Value rest = n;
  std::vector<uint64_t> primes;
  for (uint32_t p : detail::small_primes()) {
    if (static_cast<Value>(p) * p > rest) break;
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
    if (p > 1000 && rest <= kU64Max) break;  // hand off to rho early
  }
  if (rest > 1) {
    if (rest > kU64Max)
      throw FactorRangeError("factorization supported only below 2^64 after small-prime removal");
    detail::factor_u64(static_cast<uint64_t>(rest), primes);
  }
  std::sort(primes.begin(), primes.end());

  Value check = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (!f.factors.empty() && f.factors.back().prime == primes[k])
      ++f.factors.back().exponent;
    else
      f.factors.push_back({primes[k], 1});
    check = checked_mul(check, primes[k]);
  }
  if (check != n) throw std::logic_error("factorization self-check failed");
  return f;
}

inline OmegaBound omega(Value n) {
  if (n == 0) return OmegaBound::infinity();
  return OmegaBound::finite(static_cast<unsigned>(factorize(n).factors.size()));
}

// Least prime p with p ∤ B. For every B >= 3 the result is < B; for B = 2
// it is 3.
inline uint64_t smallest_nondividing_prime(uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  for (uint32_t p : detail::small_primes())
    if (base % p != 0) return p;
  throw std::logic_error("prime table exhausted");  // unreachable for base < 2^20
}

inline std::vector<uint64_t> first_nondividing_primes(uint64_t base, unsigned count) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  std::vector<uint64_t> out;
  for (uint32_t p : detail::small_primes()) {
    if (base % p != 0) out.push_back(p);
    if (out.size() == count) return out;
  }
  throw std::logic_error("prime table exhausted");
}

}  // namespace substrime
