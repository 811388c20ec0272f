#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "substrime/arith.hpp"
#include "substrime/digits.hpp"
#include "substrime/value.hpp"

namespace substrime {

// Locates a subword W(i,j) of the input divisible by `divisor` (0 counts as
// divisible by everything).
struct Witness {
  std::size_t i = 0;
  std::size_t j = 0;
  Value value = 0;
  Value divisor = 1;
};

// Any integer with all base-B subwords prime has at most 2p digits, p the
// smallest prime not dividing B.
inline unsigned substrime_digit_cap(unsigned base) {
  return 2 * static_cast<unsigned>(smallest_nondividing_prime(base));
}

// Sweep check that the smallest prime not dividing B stays below B for all
// 3 <= B <= b_max.
inline bool verify_lemma_2_1(uint64_t b_max) {
  if (b_max < 3) throw std::invalid_argument("sweep requires b_max >= 3");
  for (uint64_t base = 3; base <= b_max; ++base)
    if (smallest_nondividing_prime(base) >= base) return false;
  return true;
}

// Constructive witness: when gcd(B,d)=1 and n >= B^d, some subword of n is
// divisible by d. Scans the suffix subwords W(0,j) keeping first-seen
// residues mod d; a zero residue yields (0,j) directly, and the first
// repeated residue W(0,a) ≡ W(0,b) yields (a+1,b). Pigeonhole guarantees a
// hit within the first d+1 prefixes, so the returned j never exceeds d.
inline Witness divisible_subword_witness(Value n, unsigned base, Value d) {
  if (n == 0) throw std::invalid_argument("witness requires n >= 1");
  if (d == 0) throw std::invalid_argument("divisor must be >= 1");
  Value a = base, b = d;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  if (a != 1) throw std::invalid_argument("base and divisor must be coprime");

  const DigitString ds = to_digits(n, base);
  // n >= B^d iff n has at least d+1 base-B digits
  if (static_cast<Value>(ds.size()) < checked_add(d, 1))
    throw std::invalid_argument("hypothesis n >= base^d not satisfied");

  if (d == 1) return {0, 0, ds.digits[0], 1};

  std::vector<std::optional<std::size_t>> seen(static_cast<std::size_t>(d));
  Value residue = 0;
  Value scale = 1;  // B^j mod d
  for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
    residue = (residue + scale * (ds.digits[j] % d)) % d;
    if (residue == 0) {
      auto w = subword(ds, 0, j);
      return {0, j, w.value, d};
    }
    auto& slot = seen[static_cast<std::size_t>(residue)];
    if (slot) {
      auto w = subword(ds, *slot + 1, j);
      return {*slot + 1, j, w.value, d};
    }
    slot = j;
    scale = scale * (base % d) % d;
  }
  throw std::logic_error("pigeonhole scan failed");  // unreachable
}

// B^(p_1 * ... * p_{k+1}) with p_i the first k+1 primes coprime to B.
// Every integer whose base-B subwords all have omega <= k lies strictly
// below this. (The first k nondividing primes are not enough: a subword
// equal to their product still has omega exactly k.)
struct FinitenessBound {
  unsigned base = 10;
  Value exponent = 1;  // product of the k+1 primes
  std::vector<uint64_t> primes;

  // v < base^exponent iff v has at most `exponent` base-B digits
  bool exceeds(Value v) const {
    Value digits = 0;
    do {
      v /= base;
      ++digits;
    } while (v > 0);
    return digits <= exponent;
  }

  // decimal expansion; only sensible while the result stays modest
  std::string decimal() const {
    if (exponent > 4000)
      throw std::length_error("bound too large to expand in decimal");
    std::vector<uint32_t> limbs{1};  // base 10^9, little-endian
    for (Value e = 0; e < exponent; ++e) {
      uint64_t carry = 0;
      for (auto& limb : limbs) {
        uint64_t t = uint64_t{limb} * base + carry;
        limb = static_cast<uint32_t>(t % 1000000000u);
        carry = t / 1000000000u;
      }
      while (carry > 0) {
        limbs.push_back(static_cast<uint32_t>(carry % 1000000000u));
        carry /= 1000000000u;
      }
    }
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
      std::string part = std::to_string(*it);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }
};

inline FinitenessBound finiteness_bound(unsigned base, unsigned k) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  FinitenessBound bound;
  bound.base = base;
  bound.primes = first_nondividing_primes(base, k + 1);
  for (uint64_t p : bound.primes) bound.exponent = checked_mul(bound.exponent, p);
  return bound;
}

}  // namespace substrime
