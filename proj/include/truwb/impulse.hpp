#pragma once

#include "truwb/waveform.hpp"

namespace truwb {

/// Sounding impulse parameters (generator stand-in). The pulse shape is a
/// smooth unipolar Gaussian whose single controlled parameter is the
/// 10-90% rise time of the leading edge.
struct ImpulseSpec {
    double rise_time = 230e-12;    // s, 10-90%
    double amplitude_pp = 1.0;     // V peak-to-peak; pulse peak = amplitude_pp/2
    double sample_rate = 5e9;      // Hz
    double duration = 4e-9;        // s, must be >= 4 * rise_time
};

/// Deterministic: identical spec -> bit-identical samples. The peak sample
/// lands exactly on the grid so the peak equals amplitude_pp/2 exactly, and
/// the edges decay below 1% of peak within the requested duration.
/// Throws std::invalid_argument for an unrepresentable pulse
/// (rise_time <= one sample period) or a too-short duration.
SampledWaveform generate_impulse(const ImpulseSpec& spec);

/// Gaussian sigma for a given 10-90% rise time.
double impulse_sigma_from_rise_time(double rise_time);

} // namespace truwb
