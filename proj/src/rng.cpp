#include "truwb/rng.hpp"

#include <cmath>
#include <numbers>

namespace truwb::rng {

double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // Box-Muller, cosine branch; two uniforms per variate keep the mapping
    // (seed, stream, counter) -> value stateless.
    const double u1 = uniform01(seed, stream, 2 * counter);
    const double u2 = uniform01(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double exponential(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return -std::log(uniform01(seed, stream, counter));
}

} // namespace truwb::rng
