#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trinom/lucas.hpp"

using namespace trinom;

namespace {

using Digits = std::vector<std::uint64_t>;

BigInt reconstruct(const DigitVector& d) {
  BigInt n = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) n = n * d.modulus.value() + *it;
  return n;
}

std::string random_decimal(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::string s(1, static_cast<char>('1' + digit(rng) % 9));
  while (s.size() < len) s += static_cast<char>('0' + digit(rng));
  return s;
}

}  // namespace

TEST_CASE("base_p_digits examples") {
  CHECK(base_p_digits(BigInt(10), PrimeModulus(7)).digits == Digits{3, 1});
  CHECK(base_p_digits(BigInt(0), PrimeModulus(13)).digits == Digits{0});
  CHECK(base_p_digits(BigInt(49), PrimeModulus(7)).digits == Digits{0, 0, 1});
  CHECK(base_p_digits("49", PrimeModulus(7)).digits == Digits{0, 0, 1});
  CHECK(base_p_digits("000", PrimeModulus(7)).digits == Digits{0});
}

TEST_CASE("parse_decimal rejects non-numeric input") {
  CHECK_THROWS_AS(parse_decimal(""), InvalidNumber);
  CHECK_THROWS_AS(parse_decimal("-5"), InvalidNumber);
  CHECK_THROWS_AS(parse_decimal("12a"), InvalidNumber);
  CHECK_THROWS_AS(parse_decimal("1e5"), InvalidNumber);
  CHECK(parse_decimal("123456789012345678901234567890") ==
        BigInt("123456789012345678901234567890"));
}

TEST_CASE("digits reconstruct n") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const PrimeModulus p(i % 5 == 0 ? 4611686018427387847ULL
                                    : oracle::random_prime(rng, 2, i % 2 ? 100 : 1000000));
    const BigInt n = i % 2 ? BigInt(rng() % 1000000000000000001ULL) : BigInt(random_decimal(rng, 200));
    const auto d = base_p_digits(n, p);
    REQUIRE(reconstruct(d) == n);
    for (auto digit : d.digits) REQUIRE(digit < p.value());
    REQUIRE((d.digits.size() == 1 || d.digits.back() != 0));
  }
}

TEST_CASE("lucas_eval examples") {
  const auto t7 = table_via_recurrence(QuadraticSpec::trinomial(), PrimeModulus(7));
  CHECK(lucas_eval(t7, BigInt(10)) == Residue(0, 7));
  CHECK(lucas_eval(t7, "0") == Residue(1, 7));
  CHECK(lucas_eval(t7, BigInt(6)) == Residue(1, 7));
  CHECK(lucas_eval(t7, "10") == Residue(8953 % 7, 7));
  CHECK_THROWS_AS(lucas_eval(t7, "ten"), InvalidNumber);
}

TEST_CASE("lucas_eval on huge n against an independent digit product") {
  // Expected values frozen from a separate script that expands the tables
  // by brute force and walks base-p digits one division at a time.
  const auto tri = QuadraticSpec::trinomial();
  const auto del = QuadraticSpec::delannoy();
  auto eval = [](const QuadraticSpec& s, std::uint64_t p, const char* n) {
    return lucas_eval(table_via_recurrence(s, PrimeModulus(p)), n).value();
  };
  CHECK(eval(tri, 7, "100000000000000000000") == 0);
  CHECK(eval(tri, 13, "100000000000000000000") == 5);
  CHECK(eval(tri, 101, "100000000000000000000") == 23);
  CHECK(eval(tri, 13, "123456789012345678901234567890") == 3);
  CHECK(eval(tri, 101, "123456789012345678901234567890") == 90);
  CHECK(eval(del, 101, "18446744073709551629") == 88);
  CHECK(eval(tri, 101, "18446744073709551629") == 95);
  CHECK(eval(del, 101, "31415926535897932384626433832795028841971") == 28);
  CHECK(eval(tri, 101, "31415926535897932384626433832795028841971") == 72);
  CHECK(eval(tri, 13, "31415926535897932384626433832795028841971") == 7);
}

TEST_CASE("lucas_eval matches the one-division-per-digit oracle") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const PrimeModulus p(oracle::random_prime(rng, 3, 2000));
    const auto table = table_via_recurrence(QuadraticSpec::delannoy(), p);
    const BigInt n(random_decimal(rng, 1 + rng() % 120));
    REQUIRE(lucas_eval(table, n).value() == oracle::digit_product(table.residues, n, p.value()));
  }
}

TEST_CASE("digit blocks multiply") {
  std::mt19937_64 rng(31);
  for (std::uint64_t p : {5, 7, 11, 13, 17, 101}) {
    const PrimeModulus m(p);
    for (const auto& spec : {QuadraticSpec::trinomial(), QuadraticSpec::delannoy()}) {
      const auto table = table_via_recurrence(spec, m);
      for (int i = 0; i < 20; ++i) {
        const BigInt n(random_decimal(rng, 1 + rng() % 40));
        const auto base = lucas_eval(table, n);
        for (std::uint64_t d = 0; d < p; ++d) {
          REQUIRE(lucas_eval(table, n * p + d) == mod_mul(base, table.at(d)));
        }
      }
    }
  }
}

TEST_CASE("verify_lucas examples") {
  CHECK(verify_lucas(QuadraticSpec::trinomial(), PrimeModulus(7), 2000).holds);
  CHECK(verify_lucas(QuadraticSpec::delannoy(), PrimeModulus(13), 2000).holds);
  CHECK(verify_lucas(QuadraticSpec::trinomial(), PrimeModulus(5), 4).holds);
  CHECK_THROWS_AS(verify_lucas(QuadraticSpec::make(-1, 2), PrimeModulus(5), 10),
                  NonIntegerSequence);
  CHECK_THROWS_AS(verify_lucas(QuadraticSpec::trinomial(), PrimeModulus(5), 10, 0),
                  std::invalid_argument);
}

TEST_CASE("verify_lucas is independent of the thread split") {
  for (int jobs : {1, 2, 3, 8}) {
    const auto r = verify_lucas(QuadraticSpec::delannoy(), PrimeModulus(11), 3000, jobs);
    CHECK(r.holds);
    CHECK_FALSE(r.counterexample.has_value());
  }
}
