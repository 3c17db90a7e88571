#pragma once

// Sequences with generating function (1 + a x + b x^2)^(-1/2), exactly and
// modulo odd primes.
//
// From F = P^(-1/2) we get 2 P F' + P' F = 0, which on coefficients reads
//
//   2(n+1) R_{n+1} + a(2n+1) R_n + 2bn R_{n-1} = 0,   R_0 = 1.
//
// The residue table of the first p terms can be built either by running that
// recurrence in Z/pZ, or as the coefficients of P(x)^((p-1)/2) mod p. The two
// routes are independent and are expected to agree for every odd p.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/modmath.hpp"

namespace trinom {

using BigInt = boost::multiprecision::cpp_int;

/// Selects P(x) = 1 + a x + b x^2.
struct QuadraticSpec {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::optional<std::string> name;

  /// Throws std::invalid_argument when b == 0.
  static QuadraticSpec make(std::int64_t a, std::int64_t b);
  static QuadraticSpec trinomial() { return {-2, -3, "trinomial"}; }
  static QuadraticSpec delannoy() { return {-6, 1, "delannoy"}; }

  /// "trinomial", "delannoy" or "quad:a=<a>,b=<b>".
  std::string label() const;

  friend bool operator==(const QuadraticSpec&, const QuadraticSpec&) = default;
};

class NonIntegerSequence : public std::domain_error {
 public:
  explicit NonIntegerSequence(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class UnsupportedModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExactSequence {
  QuadraticSpec spec;
  std::vector<BigInt> terms;
};

enum class Provenance { recurrence, poly_pow };

const char* to_string(Provenance p) noexcept;

/// R_0 .. R_{p-1} mod p.
struct ResidueTable {
  QuadraticSpec spec;
  PrimeModulus modulus;
  std::vector<std::uint64_t> residues;  // canonical values, length p
  Provenance provenance;
  /// b == 0 mod p: P collapses to degree <= 1 and the poly_pow table is
  /// zero-padded.
  bool degenerate_b = false;

  std::size_t size() const noexcept { return residues.size(); }
  Residue at(std::size_t j) const { return Residue::from_canonical(residues.at(j), modulus); }
};

/// Middle coefficient of (1 + x + x^2)^n by repeated integer multiplication.
BigInt trinomial_expand_oracle(std::size_t n);

/// R_0 .. R_{count-1} via the recurrence with exact division checks.
/// Throws NonIntegerSequence naming the first index that is not integral.
ExactSequence exact_terms(const QuadraticSpec& spec, std::size_t count);

ResidueTable table_via_recurrence(const QuadraticSpec& spec, PrimeModulus p);
ResidueTable table_via_poly_pow(const QuadraticSpec& spec, PrimeModulus p);

/// Thread-safe memo of residue tables keyed by (a mod p, b mod p, p, route).
/// Concurrent lookups share a lock; a miss computes outside the lock and
/// inserts if still absent, so a racing duplicate computation is discarded.
class TableCache {
 public:
  TableCache();
  ~TableCache();
  TableCache(const TableCache&) = delete;
  TableCache& operator=(const TableCache&) = delete;

  std::shared_ptr<const ResidueTable> get(const QuadraticSpec& spec, PrimeModulus p,
                                          Provenance route);
  std::size_t size() const;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Process-wide cache used by the analysis pipeline and the CLI.
TableCache& default_table_cache();

}  // namespace trinom
