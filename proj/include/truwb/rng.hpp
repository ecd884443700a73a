#pragma once

#include <cstdint>

namespace truwb::rng {

// Counter-based generator: every variate is a pure function of
// (seed, stream, counter), so results do not depend on evaluation order
// and concurrent consumers never share state.

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent sub-seed for a named purpose.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return mix64(mix64(seed ^ 0x5851f42d4c957f2dULL) ^ (tag * 0xd1342543de82ef95ULL + 1));
}

constexpr std::uint64_t value(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t h = mix64(seed ^ 0x8e2f9d4b6a3c5e71ULL);
    h = mix64(h ^ (stream * 0x9e3779b97f4a7c15ULL + 1));
    h = mix64(h ^ (counter * 0xd1342543de82ef95ULL + 1));
    return h;
}

// Uniform on the open interval (0,1); never returns 0 or 1.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return (static_cast<double>(value(seed, stream, counter) >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Standard normal via Box-Muller; one variate per (stream, counter) pair.
double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Exponential with unit mean.
double exponential(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

} // namespace truwb::rng
