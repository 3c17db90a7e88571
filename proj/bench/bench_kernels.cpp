// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "trinom/analysis.hpp"
#include "trinom/kernels.hpp"
#include "trinom/lucas.hpp"

namespace {

using trinom::kernels::Coeffs;

Coeffs random_coeffs(std::size_t n, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  Coeffs c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

constexpr std::uint64_t kPrime = 1000000007ULL;

template <Coeffs (*Kernel)(std::span<const std::uint64_t>, std::span<const std::uint64_t>,
                           std::uint64_t)>
void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = random_coeffs(n, kPrime, 1);
  const auto g = random_coeffs(n, kPrime, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, g, kPrime));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_Convolve<trinom::kernels::convolve_reference>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Convolve<trinom::kernels::convolve_schoolbook>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Convolve<trinom::kernels::convolve_karatsuba>)->RangeMultiplier(4)->Range(64, 65536);

void BM_TableRecurrence(benchmark::State& state) {
  const trinom::PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trinom::table_via_recurrence(trinom::QuadraticSpec::trinomial(), p));
  }
}
BENCHMARK(BM_TableRecurrence)->Arg(1009)->Arg(10007)->Arg(100003);

void BM_TablePolyPow(benchmark::State& state) {
  const trinom::PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trinom::table_via_poly_pow(trinom::QuadraticSpec::trinomial(), p));
  }
}
BENCHMARK(BM_TablePolyPow)->Arg(1009)->Arg(10007)->Arg(100003)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  const auto primes = trinom::primes_in_range(5, 997);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    trinom::default_table_cache().clear();
    benchmark::DoNotOptimize(
        trinom::verify_theorem(trinom::QuadraticSpec::trinomial(), primes, jobs));
  }
}
BENCHMARK(BM_VerifyTheorem)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyLucas(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trinom::verify_lucas(trinom::QuadraticSpec::delannoy(),
                                                  trinom::PrimeModulus(17), 5000, jobs));
  }
}
BENCHMARK(BM_VerifyLucas)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LucasEval(benchmark::State& state) {
  const auto table =
      trinom::table_via_recurrence(trinom::QuadraticSpec::trinomial(), trinom::PrimeModulus(101));
  std::mt19937_64 rng(3);
  std::string n(1, '9');
  while (n.size() < static_cast<std::size_t>(state.range(0))) n += static_cast<char>('0' + rng() % 10);
  for (auto _ : state) benchmark::DoNotOptimize(trinom::lucas_eval(table, n));
}
BENCHMARK(BM_LucasEval)->Arg(20)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
