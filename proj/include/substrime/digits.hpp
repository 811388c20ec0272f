#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "substrime/value.hpp"

namespace substrime {

// Base-B positional expansion, least-significant digit first, so that the
// subword value W(i,j) = sum_{k=i..j} x_k B^(k-i) is index-stable.
// Canonical form: no leading zero except for the value 0 itself.
struct DigitString {
  unsigned base = 10;
  std::vector<unsigned> digits;  // digits[0] is x_0, least significant

  std::size_t size() const { return digits.size(); }
  std::size_t top_index() const { return digits.size() - 1; }  // m
};

struct SubwordRef {
  std::size_t i = 0;
  std::size_t j = 0;
  Value value = 0;
};

inline DigitString to_digits(Value n, unsigned base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  DigitString ds;
  ds.base = base;
  if (n == 0) {
    ds.digits.push_back(0);
    return ds;
  }
  while (n > 0) {
    ds.digits.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  return ds;
}

inline void validate(const DigitString& ds) {
  if (ds.base < 2) throw std::invalid_argument("base must be >= 2");
  if (ds.digits.empty()) throw std::invalid_argument("digit string must be non-empty");
  for (unsigned d : ds.digits)
    if (d >= ds.base) throw std::invalid_argument("digit out of range for base");
  if (ds.digits.size() > 1 && ds.digits.back() == 0)
    throw std::invalid_argument("non-canonical digit string: leading zero");
}

inline Value from_digits(const DigitString& ds) {
  validate(ds);
  Value v = 0;
  for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it)
    v = checked_add(checked_mul(v, ds.base), *it);
  return v;
}

inline SubwordRef subword(const DigitString& ds, std::size_t i, std::size_t j) {
  if (i > j || j >= ds.digits.size())
    throw std::out_of_range("subword indices must satisfy 0 <= i <= j <= m");
  Value v = 0;
  for (std::size_t k = j + 1; k-- > i;)
    v = checked_add(checked_mul(v, ds.base), ds.digits[k]);
  return {i, j, v};
}

// All (m+1)(m+2)/2 subwords in lexicographic (i,j) order. Values may repeat.
inline std::vector<SubwordRef> all_subwords(const DigitString& ds) {
  validate(ds);
  std::vector<SubwordRef> out;
  const std::size_t m = ds.top_index();
  out.reserve((m + 1) * (m + 2) / 2);
  for (std::size_t i = 0; i <= m; ++i) {
    Value v = 0;
    Value scale = 1;
    for (std::size_t j = i; j <= m; ++j) {
      v = checked_add(v, checked_mul(scale, ds.digits[j]));
      out.push_back({i, j, v});
      if (j < m) scale = checked_mul(scale, ds.base);
    }
  }
  return out;
}

// Most-significant digit first; digits >= 10 wrapped in parentheses; the
// base follows after '|'. Matches the grammar:
//   digit := [0-9] | "(" decimal ")"    (parens only for digit >= 10)
//   rendered := digit+ "|" decimal-base
inline std::string render(const DigitString& ds) {
  validate(ds);
  std::string s;
  for (auto it = ds.digits.rbegin(); it != ds.digits.rend(); ++it) {
    if (*it < 10) {
      s.push_back(static_cast<char>('0' + *it));
    } else {
      s.push_back('(');
      s += std::to_string(*it);
      s.push_back(')');
    }
  }
  s.push_back('|');
  s += std::to_string(ds.base);
  return s;
}

inline DigitString parse_rendered(std::string_view s) {
  const auto bar = s.rfind('|');
  if (bar == std::string_view::npos || bar == 0 || bar + 1 == s.size())
    throw std::invalid_argument("rendered digit string must be <word>|<base>");
  unsigned base = 0;
  for (char c : s.substr(bar + 1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed base");
    base = base * 10 + static_cast<unsigned>(c - '0');
    if (base > 100000) throw std::invalid_argument("base out of range");
  }
  if (base < 2) throw std::invalid_argument("base must be >= 2");

  std::vector<unsigned> msb_first;
  std::string_view word = s.substr(0, bar);
  for (std::size_t p = 0; p < word.size();) {
    if (word[p] == '(') {
      const auto close = word.find(')', p);
      if (close == std::string_view::npos || close == p + 1)
        throw std::invalid_argument("unterminated or empty parenthesized digit");
      unsigned d = 0;
      for (std::size_t q = p + 1; q < close; ++q) {
        if (word[q] < '0' || word[q] > '9')
          throw std::invalid_argument("malformed parenthesized digit");
        d = d * 10 + static_cast<unsigned>(word[q] - '0');
        if (d > 100000) throw std::invalid_argument("digit out of range");
      }
      if (d < 10)
        throw std::invalid_argument("parentheses are reserved for digits >= 10");
      msb_first.push_back(d);
      p = close + 1;
    } else if (word[p] >= '0' && word[p] <= '9') {
      msb_first.push_back(static_cast<unsigned>(word[p] - '0'));
      ++p;
    } else {
      throw std::invalid_argument("unexpected character in digit word");
    }
  }
  if (msb_first.empty()) throw std::invalid_argument("empty digit word");
  for (unsigned d : msb_first)
    if (d >= base) throw std::invalid_argument("digit out of range for base");
  if (msb_first.size() > 1 && msb_first.front() == 0)
    throw std::invalid_argument("leading zero in rendered digit string");

  DigitString ds;
  ds.base = base;
  ds.digits.assign(msb_first.rbegin(), msb_first.rend());
  return ds;
}

}  // namespace substrime
