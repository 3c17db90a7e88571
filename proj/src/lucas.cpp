#include "trinom/lucas.hpp"

#include <limits>
#include <span>

namespace trinom {

namespace {

std::uint64_t reduce_big(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;  // sign follows v
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// Largest p^k that fits in 64 bits, with its exponent.
std::pair<std::uint64_t, int> word_power(std::uint64_t p) {
  std::uint64_t pk = p;
  int k = 1;
  while (pk <= std::numeric_limits<std::uint64_t>::max() / p) {
    pk *= p;
    ++k;
  }
  return {pk, k};
}

Residue digit_product(const ResidueTable& table, std::span<const std::uint64_t> digits) {
  const std::uint64_t p = table.modulus.value();
  std::uint64_t acc = 1;
  for (auto d : digits) {
    acc = raw::mul(acc, table.residues[d], p);
    if (acc == 0) break;
  }
  return Residue::from_canonical(acc, table.modulus);
}

void check_table(const ResidueTable& table) {
  if (table.residues.size() != table.modulus.value()) {
    throw std::invalid_argument("residue table must hold exactly p entries");
  }
}

}  // namespace

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw InvalidNumber("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidNumber("'" + std::string(text) + "' is not a non-negative decimal integer");
    }
  }
  return BigInt(std::string(text));
}

DigitVector base_p_digits(const BigInt& n, PrimeModulus p) {
  if (n < 0) throw InvalidNumber("negative index");
  const auto [pk, k] = word_power(p.value());
  DigitVector out{{}, p};
  BigInt rest = n;
  BigInt chunk;
  while (rest > 0) {
    boost::multiprecision::divide_qr(rest, BigInt(pk), rest, chunk);
    auto word = chunk.convert_to<std::uint64_t>();
    for (int i = 0; i < k; ++i) {
      out.digits.push_back(word % p.value());
      word /= p.value();
    }
  }
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  if (out.digits.empty()) out.digits.push_back(0);
  return out;
}

DigitVector base_p_digits(std::string_view decimal, PrimeModulus p) {
  return base_p_digits(parse_decimal(decimal), p);
}

Residue lucas_eval(const ResidueTable& table, const BigInt& n) {
  check_table(table);
  return digit_product(table, base_p_digits(n, table.modulus).digits);
}

Residue lucas_eval(const ResidueTable& table, std::string_view decimal) {
  return lucas_eval(table, parse_decimal(decimal));
}

LucasCheck verify_lucas(const QuadraticSpec& spec, PrimeModulus p, std::uint64_t n_max,
                        int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto table = default_table_cache().get(spec, p, Provenance::recurrence);
  const ExactSequence exact = exact_terms(spec, static_cast<std::size_t>(n_max) + 1);
  const std::uint64_t q = p.value();

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t first_bad = kNone;
  const auto count = static_cast<std::int64_t>(n_max) + 1;

#pragma omp parallel for schedule(static) reduction(min : first_bad) num_threads(jobs) if (jobs > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::uint64_t>(i);
    const std::uint64_t product = lucas_eval(*table, BigInt(n)).value();
    if (product != reduce_big(exact.terms[n], q) && n < first_bad) first_bad = n;
  }

  LucasCheck result;
  if (first_bad != kNone) {
    result.holds = false;
    result.counterexample = first_bad;
    result.expected = reduce_big(exact.terms[first_bad], q);
    result.actual = lucas_eval(*table, BigInt(first_bad)).value();
  }
  return result;
}

}  // namespace trinom
