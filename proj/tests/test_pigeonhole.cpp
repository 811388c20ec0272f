#include <doctest.h>

#include <numeric>
#include <random>

#include "substrime/pigeonhole.hpp"
#include "substrime/search.hpp"

using namespace substrime;

TEST_CASE("witness examples") {
  SUBCASE("1234 has subword 3 divisible by 3") {
    const Witness w = divisible_subword_witness(1234, 10, 3);
    CHECK(w.i == 1);
    CHECK(w.j == 1);
    CHECK(w.value == 3);
    CHECK(w.divisor == 3);
  }
  SUBCASE("zero subwords count as divisible") {
    const Witness w = divisible_subword_witness(1001, 10, 3);
    CHECK(w.i == 1);
    CHECK(w.j == 1);
    CHECK(w.value == 0);
  }
  SUBCASE("n = B^d short-circuits on a zero digit") {
    const Witness w = divisible_subword_witness(1000, 10, 3);
    CHECK(w.value == 0);
  }
  SUBCASE("d = 1 degenerates to the first digit") {
    const Witness w = divisible_subword_witness(1234, 10, 1);
    CHECK(w.i == 0);
    CHECK(w.j == 0);
    CHECK(w.value == 4);
  }
}

TEST_CASE("witness hypothesis violations are rejected") {
  CHECK_THROWS_AS(divisible_subword_witness(1234, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(divisible_subword_witness(999, 10, 3), std::invalid_argument);
  CHECK_THROWS_AS(divisible_subword_witness(0, 10, 3), std::invalid_argument);
  CHECK_THROWS_AS(divisible_subword_witness(1234, 10, 0), std::invalid_argument);
}

TEST_CASE("random witnesses are valid and found within d+1 prefixes") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 1000) {
    const unsigned base = 2 + rng() % 15;  // 2..16
    const Value d = 1 + rng() % 12;
    if (std::gcd(uint64_t{base}, static_cast<uint64_t>(d)) != 1) continue;
    const unsigned digits = static_cast<unsigned>(d) + 1 + rng() % 4;
    Value n = 1 + rng() % (base - 1);
    for (unsigned t = 1; t < digits; ++t) n = n * base + rng() % base;

    const Witness w = divisible_subword_witness(n, base, d);
    CHECK(w.divisor == d);
    CHECK(w.value % d == 0);
    CHECK(w.i <= w.j);
    CHECK(w.j <= static_cast<std::size_t>(d));  // scan stops within d+1 prefixes
    CHECK(w.value == subword(to_digits(n, base), w.i, w.j).value);
    ++done;
  }
}

TEST_CASE("substrime digit cap is twice the smallest nondividing prime") {
  CHECK(substrime_digit_cap(10) == 6);
  CHECK(substrime_digit_cap(3) == 4);
  CHECK(substrime_digit_cap(91) == 4);
  CHECK(substrime_digit_cap(2) == 6);
  CHECK(substrime_digit_cap(30) == 14);
}

TEST_CASE("substrimes stay within the digit cap") {
  for (unsigned base : {3u, 5u, 8u, 10u, 12u}) {
    const SearchConfig cfg{base, SearchMode::kStrictPrime};
    const auto report = enumerate_substrimes(cfg);
    REQUIRE(report.exhausted);
    for (Value v : report.members)
      CHECK(to_digits(v, base).size() <= substrime_digit_cap(base));
  }
}

TEST_CASE("lemma sweep") {
  CHECK(verify_lemma_2_1(3));
  CHECK(verify_lemma_2_1(4));
  CHECK(verify_lemma_2_1(1000));
  CHECK_THROWS_AS(verify_lemma_2_1(2), std::invalid_argument);
}

TEST_CASE("finiteness bound uses the first k+1 nondividing primes") {
  const auto b10 = finiteness_bound(10, 1);
  CHECK(b10.primes == std::vector<uint64_t>{3, 7});
  CHECK(b10.exponent == 21);
  CHECK(b10.decimal() == "1" + std::string(21, '0'));
  CHECK(b10.exceeds(9719));

  const auto b2 = finiteness_bound(2, 1);
  CHECK(b2.primes == std::vector<uint64_t>{3, 5});
  CHECK(b2.exponent == 15);
  CHECK(b2.decimal() == "32768");
  for (Value v : {Value{1}, Value{3}, Value{7}}) CHECK(b2.exceeds(v));

  const auto b10k2 = finiteness_bound(10, 2);
  CHECK(b10k2.primes == std::vector<uint64_t>{3, 7, 11});
  CHECK(b10k2.exponent == 231);
  CHECK(b10k2.decimal() == "1" + std::string(231, '0'));
  CHECK(b10k2.exceeds(Value{7319797913u}));

  CHECK_THROWS_AS(finiteness_bound(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(finiteness_bound(1, 1), std::invalid_argument);
}

TEST_CASE("completed enumerations stay below the finiteness bound") {
  for (unsigned base : {2u, 3u, 10u}) {
    for (unsigned k : {1u, 2u}) {
      SearchConfig cfg{base, SearchMode::kOmegaBounded, OmegaBound::finite(k)};
      const auto report = enumerate_bounded(cfg);
      REQUIRE(report.exhausted);
      if (report.largest) CHECK(finiteness_bound(base, k).exceeds(*report.largest));
    }
  }
}
