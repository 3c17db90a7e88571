#include "trinom/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trinom/modmath.hpp"

namespace trinom::kernels {

namespace {

using u128 = unsigned __int128;

// Products are below 2^124 for p < 2^62, so sixteen of them still fit in
// 128 bits; fold every 8 to stay well clear.
constexpr int kFoldEvery = 8;

// Parallelise the schoolbook loop only when there is enough work per thread.
constexpr std::size_t kParallelWork = std::size_t{1} << 16;

// Spawn Karatsuba sub-products as tasks only near the root of the recursion.
constexpr int kTaskDepth = 3;
constexpr std::size_t kTaskMinLength = 512;

inline std::uint64_t dot_at(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                            std::size_t k, std::uint64_t p) {
  const std::size_t lo = k >= g.size() ? k - g.size() + 1 : 0;
  const std::size_t hi = std::min(k, f.size() - 1);
  u128 acc = 0;
  int pending = 0;
  for (std::size_t i = lo; i <= hi; ++i) {
    acc += static_cast<u128>(f[i]) * g[k - i];
    if (++pending == kFoldEvery) {
      acc %= p;
      pending = 0;
    }
  }
  return static_cast<std::uint64_t>(acc % p);
}

void schoolbook_into(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                     std::uint64_t p, std::span<std::uint64_t> out) {
  const std::size_t n = f.size() + g.size() - 1;
  for (std::size_t k = 0; k < n; ++k) out[k] = dot_at(f, g, k, p);
}

Coeffs karatsuba_equal(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                       std::uint64_t p, int depth) {
  const std::size_t n = a.size();
  Coeffs out(2 * n - 1);
  if (n <= kKaratsubaThreshold) {
    schoolbook_into(a, b, p, out);
    return out;
  }

  const std::size_t m = n / 2;
  const std::size_t h = n - m;  // h >= m
  auto a0 = a.first(m), a1 = a.subspan(m);
  auto b0 = b.first(m), b1 = b.subspan(m);

  Coeffs sa(a1.begin(), a1.end());
  Coeffs sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < m; ++i) {
    sa[i] = raw::add(sa[i], a0[i], p);
    sb[i] = raw::add(sb[i], b0[i], p);
  }

  Coeffs z0, z1, z2;
  const bool spawn = depth < kTaskDepth && n >= kTaskMinLength;
#pragma omp task shared(z0) if (spawn)
  z0 = karatsuba_equal(a0, b0, p, depth + 1);
#pragma omp task shared(z2) if (spawn)
  z2 = karatsuba_equal(a1, b1, p, depth + 1);
  z1 = karatsuba_equal(sa, sb, p, depth + 1);
#pragma omp taskwait

  // z1 <- z1 - z0 - z2, the cross term.
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = raw::sub(z1[i], z0[i], p);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = raw::sub(z1[i], z2[i], p);

  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] = z2[i];
  for (std::size_t i = 0; i < 2 * h - 1; ++i) out[i + m] = raw::add(out[i + m], z1[i], p);
  return out;
}

}  // namespace

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Coeffs convolve_reference(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                          std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Coeffs out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = raw::add(out[i + j], raw::mul(f[i], g[j], p), p);
    }
  }
  return out;
}

Coeffs convolve_schoolbook(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                           std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  const std::size_t n = f.size() + g.size() - 1;
  Coeffs out(n);
  const bool parallel = f.size() * g.size() >= kParallelWork;
  const auto signed_n = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t k = 0; k < signed_n; ++k) {
    out[static_cast<std::size_t>(k)] = dot_at(f, g, static_cast<std::size_t>(k), p);
  }
  return out;
}

Coeffs convolve_karatsuba(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                          std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  const std::size_t n = std::max(f.size(), g.size());
  Coeffs fa(f.begin(), f.end()), ga(g.begin(), g.end());
  fa.resize(n, 0);
  ga.resize(n, 0);

  Coeffs full;
#ifdef _OPENMP
  if (!omp_in_parallel() && n >= kTaskMinLength && omp_get_max_threads() > 1) {
#pragma omp parallel
#pragma omp single
    full = karatsuba_equal(fa, ga, p, 0);
  } else {
    full = karatsuba_equal(fa, ga, p, kTaskDepth);
  }
#else
  full = karatsuba_equal(fa, ga, p, kTaskDepth);
#endif
  full.resize(f.size() + g.size() - 1);
  return full;
}

Coeffs convolve(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                std::uint64_t p) {
  if (std::min(f.size(), g.size()) <= kKaratsubaThreshold) {
    return convolve_schoolbook(f, g, p);
  }
  return convolve_karatsuba(f, g, p);
}

}  // namespace trinom::kernels
