#pragma once

#include "truwb/waveform.hpp"

namespace truwb {

/// Windowed-sinc (Kaiser) rate conversion evaluated at each output instant.
///
/// The anti-alias / interpolation low-pass is centered at 0.45 * min(input
/// rate, target rate) with the stop band starting at the smaller Nyquist, so
/// content below 0.4 * min(rate, target) passes with <0.1% ripple. Each
/// output sample is normalized by the in-support kernel weight sum, which
/// makes DC exact everywhere including the trace edges. Same-rate calls
/// return the input unchanged.
SampledWaveform resample(const SampledWaveform& w, double target_rate);

} // namespace truwb
