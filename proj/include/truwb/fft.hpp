#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace truwb::fft {

std::size_t next_pow2(std::size_t n);

/// In-place iterative radix-2 transform; a.size() must be a power of two.
/// inverse=true applies the conjugate transform and the 1/N scale.
void transform(std::vector<std::complex<double>>& a, bool inverse);

} // namespace truwb::fft
