#pragma once

#include "truwb/waveform.hpp"

namespace truwb {

/// equal_energy: burst energy (sum s^2 / rate) is set to P_o * 1 s, i.e. P_o
/// read as the target energy in V^2*s. Bursts of different durations then
/// carry identical energy, which is the convention the focusing-gain
/// comparison assumes. equal_average_power: mean squared amplitude over the
/// burst's own duration equals P_o.
enum class power_convention { equal_energy, equal_average_power };

struct Normalized {
    SampledWaveform waveform;
    double scale = 1.0; // positive factor that was applied
};

Normalized normalize_power_scaled(const SampledWaveform& w, double p_o, power_convention c);
SampledWaveform normalize_power(const SampledWaveform& w, double p_o, power_convention c);

} // namespace truwb
