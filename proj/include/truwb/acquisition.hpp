#pragma once

#include <cstdint>
#include <optional>

#include "truwb/waveform.hpp"

namespace truwb {

/// Additive white Gaussian noise per acquisition, per sample.
struct NoiseModel {
    double sigma = 0.0; // V, per-sample standard deviation
    std::uint64_t seed = 0;
};

struct AcquisitionRecord {
    SampledWaveform averaged;
    std::uint32_t n_avg = 1;
    NoiseModel noise{};
    std::optional<SampledWaveform> clean_ref; // simulation-only ground truth
};

/// Average of n_avg noisy acquisitions of the same clean trace:
/// averaged[k] = clean[k] + (1/M) * sum_i n_{i,k}, n i.i.d. N(0, sigma^2).
/// Noise is derived per (seed, acquisition index, sample index), so the
/// result is independent of evaluation order. sigma = 0 returns the clean
/// trace bit-exactly.
AcquisitionRecord acquire(const SampledWaveform& clean, const NoiseModel& noise,
                          std::uint32_t n_avg);

/// Mean squared amplitude (V^2) over a window the caller asserts is free of
/// signal. Throws std::invalid_argument if the window misses the trace.
double estimate_noise_floor(const AcquisitionRecord& rec, const TimeWindow& quiet);

} // namespace truwb
