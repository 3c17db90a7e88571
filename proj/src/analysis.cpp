#include "trinom/analysis.hpp"

#include <algorithm>
#include <exception>

namespace trinom {

ZeroPattern zero_pattern(const ResidueTable& table) {
  ZeroPattern out{std::string(table.size(), '0'), table.modulus.value()};
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (table.residues[j] != 0) out.bits[j] = '1';
  }
  return out;
}

bool is_palindrome(std::string_view bits) noexcept {
  return std::equal(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(bits.size() / 2),
                    bits.rbegin());
}

bool mirror_check(const DensePoly& poly, const Residue& b, std::uint64_t k) {
  if (b.modulus() != poly.modulus()) throw ModulusMismatch(poly.modulus(), b.modulus());
  if (b.is_zero()) throw PreconditionViolation("mirror identity needs b != 0 mod p");
  if (!poly.is_zero() && poly.degree() > 2 * k) return false;

  const Residue b_inv = mod_inv(b);
  Residue factor = mod_pow(b, k);  // b^{k-j} at j = 0
  for (std::uint64_t j = 0; j <= 2 * k; ++j) {
    if (poly.coeff(2 * k - j) != mod_mul(factor, poly.coeff(j))) return false;
    factor = mod_mul(factor, b_inv);
  }
  return true;
}

Residue lucas_condition(const QuadraticSpec& spec, PrimeModulus p) {
  if (!p.is_odd()) throw UnsupportedModulus("lucas_condition needs an odd prime");
  const Residue a(spec.a, p), b(spec.b, p);
  const Residue two(2, p), three(3, p), four(4, p);
  // 2 R_1 + a R_0 = 0 and 4 R_2 + 3a R_1 + 2b R_0 = 0.
  const Residue r1 = -a * mod_inv(two);
  const Residue r2 = -(three * a * r1 + two * b) * mod_inv(four);
  return three * r1 * r1 - two * r2;
}

bool VerificationRecord::violation() const noexcept {
  // The two table routes agree for every odd prime, degenerate b included.
  if (!tables_agree) return true;
  return claim_applies() && (!palindromic || !mirror_holds);
}

namespace {

VerificationRecord verify_at_two(const QuadraticSpec& spec) {
  // Needs R_1 = -a/2 to be an integer; exact_terms throws otherwise.
  const ExactSequence seq = exact_terms(spec, 2);
  const BigInt& r1 = seq.terms[1];
  // 2 R_2 = -(3a R_1 + 2b) / 2, integral because a is even here.
  const BigInt two_r2 = -(3 * BigInt(spec.a) * r1 + 2 * BigInt(spec.b)) / 2;
  const BigInt condition = 3 * r1 * r1 - two_r2;

  VerificationRecord rec;
  rec.spec = spec;
  rec.p = 2;
  rec.tables_agree = true;  // single route at p = 2
  rec.pattern = {std::string("1") + (boost::multiprecision::abs(r1) % 2 != 0 ? "1" : "0"), 2};
  rec.palindromic = is_palindrome(rec.pattern);
  rec.mirror_holds = true;  // k = 0: P^0 = 1
  rec.condition_value = boost::multiprecision::abs(condition % 2) == 1 ? 1 : 0;
  rec.condition_ok = rec.condition_value != 0;
  rec.degenerate_b = spec.b % 2 == 0;
  return rec;
}

}  // namespace

VerificationRecord verify_prime(const QuadraticSpec& spec, PrimeModulus p) {
  if (!p.is_odd()) return verify_at_two(spec);

  auto& cache = default_table_cache();
  const auto by_recurrence = cache.get(spec, p, Provenance::recurrence);
  const auto by_power = cache.get(spec, p, Provenance::poly_pow);

  VerificationRecord rec;
  rec.spec = spec;
  rec.p = p.value();
  rec.tables_agree = by_recurrence->residues == by_power->residues;
  rec.pattern = zero_pattern(*by_power);
  rec.palindromic = is_palindrome(rec.pattern);
  rec.degenerate_b = by_power->degenerate_b;

  const Residue b(spec.b, p);
  if (!b.is_zero()) {
    const auto poly = DensePoly::from_canonical(p, by_power->residues);
    rec.mirror_holds = mirror_check(poly, b, (p.value() - 1) / 2);
  }

  const Residue condition = lucas_condition(spec, p);
  rec.condition_value = condition.value();
  rec.condition_ok = !condition.is_zero();
  return rec;
}

std::vector<VerificationRecord> verify_theorem(const QuadraticSpec& spec,
                                               std::span<const std::uint64_t> primes,
                                               int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<PrimeModulus> moduli;
  moduli.reserve(sorted.size());
  for (auto q : primes) {
    if (q >= kMaxModulus || !is_prime(q)) {
      throw std::invalid_argument(std::to_string(q) + " is not prime");
    }
  }
  for (auto q : sorted) moduli.emplace_back(q);

  std::vector<VerificationRecord> records(moduli.size());
  std::vector<std::exception_ptr> errors(moduli.size());
  const auto count = static_cast<std::ptrdiff_t>(moduli.size());

#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      records[idx] = verify_prime(spec, moduli[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }

  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

}  // namespace trinom
