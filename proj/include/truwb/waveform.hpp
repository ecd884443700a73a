#pragma once

#include <cstddef>
#include <vector>

namespace truwb {

/// Uniformly sampled real amplitude trace. samples[k] is the voltage at
/// time t0 + k/sample_rate.
struct SampledWaveform {
    std::vector<double> samples;
    double sample_rate = 0.0; // Hz
    double t0 = 0.0;          // s, time of first sample

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) / sample_rate; }

    /// Sum s[k]^2 / sample_rate, in V^2*s.
    double energy() const;
    /// Sum s[k]^2 / n, in V^2.
    double mean_square() const;
    double peak_abs() const;
};

/// Closed time interval, in seconds.
struct TimeWindow {
    double t_start = 0.0;
    double t_end = 0.0;
};

/// Throws std::invalid_argument if the basic invariants are violated
/// (positive rate, non-empty, all samples finite).
void validate_waveform(const SampledWaveform& w, const char* what = "waveform");

/// Sample order reversed, re-anchored to t0 = 0 (time axis negation for a
/// trace starting at t0 maps onto this after shifting).
SampledWaveform time_reverse(const SampledWaveform& w);

} // namespace truwb
