#pragma once

// Zero patterns of residue tables and the per-prime verification pipeline.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/modmath.hpp"
#include "trinom/polymod.hpp"
#include "trinom/sequences.hpp"

namespace trinom {

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// bits[j] == '1' iff residue j is nonzero; read left to right as R_0 .. R_{p-1}.
struct ZeroPattern {
  std::string bits;
  std::uint64_t modulus = 0;

  std::size_t size() const noexcept { return bits.size(); }
};

ZeroPattern zero_pattern(const ResidueTable& table);

bool is_palindrome(std::string_view bits) noexcept;
inline bool is_palindrome(const ZeroPattern& pattern) noexcept {
  return is_palindrome(pattern.bits);
}

/// Checks alpha_{2k-j} == b^{k-j} alpha_j for every j in [0, 2k], where poly
/// holds the coefficients alpha_j of (1 + a x + b x^2)^k. Negative powers of
/// b go through mod_inv. Throws PreconditionViolation when b is zero or lives
/// in a different field than poly.
bool mirror_check(const DensePoly& poly, const Residue& b, std::uint64_t k);

/// (3 R_1^2 - 2 R_2) mod p from the first three terms, computed in Z/pZ.
Residue lucas_condition(const QuadraticSpec& spec, PrimeModulus p);

struct VerificationRecord {
  QuadraticSpec spec;
  std::uint64_t p = 0;
  bool tables_agree = false;
  ZeroPattern pattern;
  bool palindromic = false;
  bool mirror_holds = false;
  std::uint64_t condition_value = 0;
  bool condition_ok = false;
  bool degenerate_b = false;

  /// Whether the zero-pattern symmetry is claimed for this prime. Only odd
  /// primes qualify: at p = 2 the pattern is "1" followed by R_1 mod 2, which
  /// need not be palindromic even when b is odd (a = 4, b = -7).
  bool claim_applies() const noexcept { return p % 2 == 1 && condition_ok && !degenerate_b; }
  /// A claimed property that failed to hold.
  bool violation() const noexcept;
};

/// Full pipeline for one prime. p == 2 is answered from the exact terms
/// R_0, R_1 since the table identity needs an odd prime.
VerificationRecord verify_prime(const QuadraticSpec& spec, PrimeModulus p);

/// One record per distinct prime, ascending. Throws std::invalid_argument
/// naming the first entry that is not prime. With jobs > 1 primes are
/// processed by an OpenMP team; output is identical for any jobs value.
std::vector<VerificationRecord> verify_theorem(const QuadraticSpec& spec,
                                               std::span<const std::uint64_t> primes,
                                               int jobs = 1);

}  // namespace trinom
