#pragma once

// R_n mod p for large n from the base-p digits of n:
//
//   R_n = prod_j R_{n_j}  (mod p),   n = sum_j n_j p^j.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "trinom/modmath.hpp"
#include "trinom/sequences.hpp"

namespace trinom {

class InvalidNumber : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base-p digits, least significant first. Zero is the single digit [0].
struct DigitVector {
  std::vector<std::uint64_t> digits;
  PrimeModulus modulus;
};

/// Parses a non-negative decimal integer of any length.
BigInt parse_decimal(std::string_view text);

DigitVector base_p_digits(const BigInt& n, PrimeModulus p);
DigitVector base_p_digits(std::string_view decimal, PrimeModulus p);

Residue lucas_eval(const ResidueTable& table, const BigInt& n);
Residue lucas_eval(const ResidueTable& table, std::string_view decimal);

struct LucasCheck {
  bool holds = true;
  /// Smallest n where the digit product differs from the exact reduction.
  std::optional<std::uint64_t> counterexample;
  std::optional<std::uint64_t> expected;  // R_n mod p at the counterexample
  std::optional<std::uint64_t> actual;    // digit product at the counterexample
};

/// Compares lucas_eval against exact terms reduced mod p for all n <= n_max.
/// jobs > 1 splits the index range across OpenMP threads; the result does not
/// depend on the split.
LucasCheck verify_lucas(const QuadraticSpec& spec, PrimeModulus p, std::uint64_t n_max,
                        int jobs = 1);

}  // namespace trinom
