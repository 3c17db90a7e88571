#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trinom/modmath.hpp"

namespace trinom {

struct QuadraticSpec;

/// Dense polynomial over Z/pZ, coefficient j at index j.
///
/// Always normalized: the leading stored coefficient is nonzero, except for
/// the zero polynomial which is stored as the single coefficient 0.
class DensePoly {
 public:
  /// Coefficients are reduced mod p and trailing zeros stripped.
  DensePoly(PrimeModulus p, std::span<const std::int64_t> coeffs);
  /// Coefficients must already be canonical (< p).
  static DensePoly from_canonical(PrimeModulus p, std::vector<std::uint64_t> coeffs);

  static DensePoly one(PrimeModulus p) { return from_canonical(p, {1}); }
  static DensePoly zero(PrimeModulus p) { return from_canonical(p, {0}); }

  PrimeModulus prime() const noexcept { return p_; }
  std::uint64_t modulus() const noexcept { return p_.value(); }

  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  /// Coefficient of x^j; zero past the degree.
  Residue coeff(std::size_t j) const noexcept {
    return Residue::from_canonical(j < coeffs_.size() ? coeffs_[j] : 0, p_);
  }
  std::span<const std::uint64_t> raw_coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  DensePoly(PrimeModulus p, std::vector<std::uint64_t> coeffs);
  void normalize() noexcept;

  PrimeModulus p_;
  std::vector<std::uint64_t> coeffs_;
};

/// 1 + a x + b x^2 reduced mod p.
DensePoly poly_from_quadratic(const QuadraticSpec& spec, PrimeModulus p);

/// Exact product; schoolbook for short operands, Karatsuba otherwise.
DensePoly poly_mul(const DensePoly& f, const DensePoly& g);

/// f^k by square-and-multiply; f^0 = 1.
DensePoly poly_pow(const DensePoly& f, std::uint64_t k);

}  // namespace trinom
