#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace substrime {

// All digit/value arithmetic runs in 128 bits. Enumeration results at
// realistic scale fit in 64 bits, but candidate caps like B^(2p) do not.
// Every add/mul that could leave the representable range goes through the
// checked helpers and raises OverflowError instead of wrapping.
using Value = unsigned __int128;

inline constexpr Value kValueMax = ~Value{0};
inline constexpr Value kU64Max = UINT64_MAX;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("addition exceeds 128-bit value range");
  return r;
}

inline Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("multiplication exceeds 128-bit value range");
  return r;
}

inline std::string to_string(Value v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline Value parse_value(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Value v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid integer literal: " + std::string(s));
    v = checked_add(checked_mul(v, 10), static_cast<Value>(c - '0'));
  }
  return v;
}

}  // namespace substrime
