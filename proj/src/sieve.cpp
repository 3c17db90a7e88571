#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "trinom/modmath.hpp"

namespace trinom {

namespace {

constexpr std::uint64_t kSegmentSize = 1 << 16;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (lo > hi) return out;

  const auto base = small_primes(isqrt(hi));
  std::vector<char> marks(kSegmentSize);

  for (std::uint64_t seg_lo = lo;; seg_lo += kSegmentSize) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegmentSize - 1);
    const std::uint64_t len = seg_hi - seg_lo + 1;
    std::fill(marks.begin(), marks.begin() + static_cast<std::ptrdiff_t>(len), 1);

    for (std::uint64_t q : base) {
      if (q * q > seg_hi) break;
      std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t m = start; m <= seg_hi; m += q) marks[m - seg_lo] = 0;
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      if (marks[i]) out.push_back(seg_lo + i);
    }
    if (seg_hi == hi) break;
  }
  return out;
}

}  // namespace trinom
