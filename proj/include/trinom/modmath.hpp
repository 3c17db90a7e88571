#pragma once

// Arithmetic in Z/pZ for prime p < 2^62, primality testing and prime
// enumeration.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinom {

class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(std::uint64_t lhs, std::uint64_t rhs);
};

class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(std::uint64_t modulus);
};

class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest modulus accepted anywhere in the library (exclusive bound).
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// A validated prime modulus. Construction runs the primality test once so
/// that residues built from it never have to.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  bool is_odd() const noexcept { return p_ != 2; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

/// An element of Z/pZ in least non-negative form.
class Residue {
 public:
  Residue(std::int64_t value, PrimeModulus p);
  /// Checked construction from a raw modulus; throws InvalidModulus.
  Residue(std::int64_t value, std::uint64_t p) : Residue(value, PrimeModulus(p)) {}

  static Residue from_canonical(std::uint64_t value, PrimeModulus p) noexcept {
    return Residue(value, p, Canonical{});
  }
  static Residue from_unsigned(std::uint64_t value, PrimeModulus p) noexcept {
    return Residue(value % p.value(), p, Canonical{});
  }

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_.value(); }
  PrimeModulus prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Canonical {};
  Residue(std::uint64_t value, PrimeModulus p, Canonical) noexcept
      : value_(value), p_(p) {}

  std::uint64_t value_;
  PrimeModulus p_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

Residue mod_add(const Residue& x, const Residue& y);
Residue mod_sub(const Residue& x, const Residue& y);
Residue mod_neg(const Residue& x);
Residue mod_mul(const Residue& x, const Residue& y);
/// x^e with 0^0 = 1.
Residue mod_pow(const Residue& x, std::uint64_t e);
/// Inverse via Fermat, x^(p-2). Throws NotInvertible for zero.
Residue mod_inv(const Residue& x);

inline Residue operator+(const Residue& x, const Residue& y) { return mod_add(x, y); }
inline Residue operator-(const Residue& x, const Residue& y) { return mod_sub(x, y); }
inline Residue operator-(const Residue& x) { return mod_neg(x); }
inline Residue operator*(const Residue& x, const Residue& y) { return mod_mul(x, y); }

// Raw kernels on canonical values; callers guarantee a, b < p < 2^62.
namespace raw {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept;

/// Reduces a signed integer into [0, p).
inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) noexcept {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace raw

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// All primes in [lo, hi], ascending. Segmented sieve.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace trinom
