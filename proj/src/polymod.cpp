#include "trinom/polymod.hpp"

#include <bit>

#include "trinom/kernels.hpp"
#include "trinom/sequences.hpp"

namespace trinom {

DensePoly::DensePoly(PrimeModulus p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  normalize();
}

DensePoly::DensePoly(PrimeModulus p, std::span<const std::int64_t> coeffs) : p_(p) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(raw::reduce(c, p.value()));
  normalize();
}

DensePoly DensePoly::from_canonical(PrimeModulus p, std::vector<std::uint64_t> coeffs) {
  return DensePoly(p, std::move(coeffs));
}

void DensePoly::normalize() noexcept {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

DensePoly poly_from_quadratic(const QuadraticSpec& spec, PrimeModulus p) {
  const std::int64_t c[] = {1, spec.a, spec.b};
  return DensePoly(p, std::span<const std::int64_t>(c));
}

DensePoly poly_mul(const DensePoly& f, const DensePoly& g) {
  if (f.prime() != g.prime()) throw ModulusMismatch(f.modulus(), g.modulus());
  if (f.is_zero() || g.is_zero()) return DensePoly::zero(f.prime());
  return DensePoly::from_canonical(f.prime(),
                                   kernels::convolve(f.raw_coeffs(), g.raw_coeffs(), f.modulus()));
}

DensePoly poly_pow(const DensePoly& f, std::uint64_t k) {
  DensePoly result = DensePoly::one(f.prime());
  if (k == 0) return result;
  // Left-to-right so the multiply step is always by the short base.
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    result = poly_mul(result, result);
    if ((k >> bit) & 1) result = poly_mul(result, f);
  }
  return result;
}

}  // namespace trinom
