#pragma once

// Convolution kernels over Z/pZ on raw canonical coefficient vectors.
//
// convolve_reference is the plain serial double loop and is kept as the
// oracle for the others; convolve_schoolbook parallelises over output
// coefficients and convolve_karatsuba recurses with OpenMP tasks near the
// root. All variants return the full product of length |f| + |g| - 1 and
// produce identical output for any thread count.

#include <cstdint>
#include <span>
#include <vector>

namespace trinom::kernels {

using Coeffs = std::vector<std::uint64_t>;

/// Below this length Karatsuba falls back to the schoolbook kernel.
inline constexpr std::size_t kKaratsubaThreshold = 32;

Coeffs convolve_reference(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                          std::uint64_t p);

Coeffs convolve_schoolbook(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                           std::uint64_t p);

Coeffs convolve_karatsuba(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                          std::uint64_t p);

/// Dispatching entry point used by DensePoly.
Coeffs convolve(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g,
                std::uint64_t p);

/// Number of OpenMP threads available to the kernels (1 without OpenMP).
int max_threads() noexcept;

}  // namespace trinom::kernels
