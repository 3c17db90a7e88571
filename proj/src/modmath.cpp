#include "trinom/modmath.hpp"

#include <array>

namespace trinom {

ModulusMismatch::ModulusMismatch(std::uint64_t lhs, std::uint64_t rhs)
    : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

NotInvertible::NotInvertible(std::uint64_t modulus)
    : std::domain_error("0 is not invertible mod " + std::to_string(modulus)) {}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw InvalidModulus("modulus " + std::to_string(p) + " exceeds 62 bits");
  }
  if (!is_prime(p)) {
    throw InvalidModulus(std::to_string(p) + " is not prime");
  }
}

Residue::Residue(std::int64_t value, PrimeModulus p)
    : value_(raw::reduce(value, p.value())), p_(p) {}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " mod " << r.modulus();
}

namespace {

PrimeModulus common(const Residue& x, const Residue& y) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch(x.modulus(), y.modulus());
  return x.prime();
}

}  // namespace

Residue mod_add(const Residue& x, const Residue& y) {
  auto p = common(x, y);
  return Residue::from_canonical(raw::add(x.value(), y.value(), p.value()), p);
}

Residue mod_sub(const Residue& x, const Residue& y) {
  auto p = common(x, y);
  return Residue::from_canonical(raw::sub(x.value(), y.value(), p.value()), p);
}

Residue mod_neg(const Residue& x) {
  return Residue::from_canonical(raw::sub(0, x.value(), x.modulus()), x.prime());
}

Residue mod_mul(const Residue& x, const Residue& y) {
  auto p = common(x, y);
  return Residue::from_canonical(raw::mul(x.value(), y.value(), p.value()), p);
}

Residue mod_pow(const Residue& x, std::uint64_t e) {
  return Residue::from_canonical(raw::pow(x.value(), e, x.modulus()), x.prime());
}

Residue mod_inv(const Residue& x) {
  if (x.is_zero()) throw NotInvertible(x.modulus());
  return mod_pow(x, x.modulus() - 2);
}

std::uint64_t raw::pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

namespace {

// Miller-Rabin round; n odd, n - 1 = d * 2^s.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  auto mulmod = [n](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % n);
  };
  std::uint64_t x = 1;
  std::uint64_t base = a % n;
  for (std::uint64_t e = d; e > 0; e >>= 1) {
    if (e & 1) x = mulmod(x, base);
    base = mulmod(base, base);
  }
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  // The first twelve primes are a deterministic witness set below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto w : kWitnesses) {
    if (!strong_probable_prime(n, w, d, s)) return false;
  }
  return true;
}

}  // namespace trinom
