#include "trinom/sequences.hpp"

#include "trinom/polymod.hpp"

namespace trinom {

QuadraticSpec QuadraticSpec::make(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::invalid_argument("b must be nonzero");
  return {a, b, std::nullopt};
}

std::string QuadraticSpec::label() const {
  if (name) return *name;
  return "quad:a=" + std::to_string(a) + ",b=" + std::to_string(b);
}

NonIntegerSequence::NonIntegerSequence(std::size_t index)
    : std::domain_error("term R_" + std::to_string(index) + " is not an integer"),
      index_(index) {}

const char* to_string(Provenance p) noexcept {
  return p == Provenance::recurrence ? "recurrence" : "poly_pow";
}

BigInt trinomial_expand_oracle(std::size_t n) {
  std::vector<BigInt> poly{1};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<BigInt> next(poly.size() + 2);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += poly[i];
      next[i + 2] += poly[i];
    }
    poly = std::move(next);
  }
  return poly[n];
}

ExactSequence exact_terms(const QuadraticSpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be at least 1");
  ExactSequence seq{spec, {}};
  seq.terms.reserve(count);
  seq.terms.emplace_back(1);

  BigInt numerator, quotient, remainder;
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const BigInt nn = n;
    numerator = -BigInt(spec.a) * (2 * nn + 1) * seq.terms[n];
    if (n > 0) numerator -= 2 * BigInt(spec.b) * nn * seq.terms[n - 1];
    const BigInt divisor = 2 * (nn + 1);
    boost::multiprecision::divide_qr(numerator, divisor, quotient, remainder);
    if (remainder != 0) throw NonIntegerSequence(n + 1);
    seq.terms.push_back(quotient);
  }
  return seq;
}

namespace {

void require_odd(PrimeModulus p) {
  if (!p.is_odd()) throw UnsupportedModulus("residue tables need an odd prime, got 2");
}

}  // namespace

ResidueTable table_via_recurrence(const QuadraticSpec& spec, PrimeModulus p) {
  require_odd(p);
  const std::uint64_t q = p.value();
  const std::uint64_t a = raw::reduce(spec.a, q);
  const std::uint64_t b = raw::reduce(spec.b, q);

  std::vector<std::uint64_t> r(q);
  r[0] = 1;
  for (std::uint64_t n = 0; n + 1 < q; ++n) {
    // R_{n+1} = -(a(2n+1) R_n + 2bn R_{n-1}) / (2(n+1))
    std::uint64_t acc = raw::mul(raw::mul(a, (2 * n + 1) % q, q), r[n], q);
    if (n > 0) acc = raw::add(acc, raw::mul(raw::mul(b, (2 * n) % q, q), r[n - 1], q), q);
    const auto divisor = Residue::from_unsigned(2 * (n + 1), p);
    r[n + 1] = raw::mul(raw::sub(0, acc, q), mod_inv(divisor).value(), q);
  }
  return {spec, p, std::move(r), Provenance::recurrence, b == 0};
}

ResidueTable table_via_poly_pow(const QuadraticSpec& spec, PrimeModulus p) {
  require_odd(p);
  const std::uint64_t q = p.value();
  const DensePoly power = poly_pow(poly_from_quadratic(spec, p), (q - 1) / 2);
  std::vector<std::uint64_t> r(power.raw_coeffs().begin(), power.raw_coeffs().end());
  r.resize(q, 0);
  return {spec, p, std::move(r), Provenance::poly_pow, raw::reduce(spec.b, q) == 0};
}

}  // namespace trinom
