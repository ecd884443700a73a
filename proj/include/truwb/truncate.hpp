#pragma once

#include <utility>

#include "truwb/waveform.hpp"

namespace truwb {

enum class trunc_mode { energy_fraction, fixed_window, tap_threshold };

struct TruncationPolicy {
    trunc_mode mode = trunc_mode::energy_fraction;
    double energy_fraction = 0.99; // in (0, 1]
    TimeWindow window{};           // fixed_window mode, absolute seconds
    double threshold = 0.01;       // tap_threshold mode, fraction of max tap power

    static TruncationPolicy energy(double fraction);
    static TruncationPolicy fixed(double t_start, double t_end);
    static TruncationPolicy taps_above(double threshold);
};

void validate_policy(const TruncationPolicy& p);

/// Cuts the waveform to the window selected by the policy and reports the
/// window (sample times of the first and last retained sample).
///
/// energy_fraction: shortest contiguous run holding >= fraction of the total
/// energy; earliest window wins among equal lengths. fixed_window must lie
/// inside the trace support. tap_threshold keeps first..last sample with
/// power >= threshold * max tap power.
std::pair<SampledWaveform, TimeWindow> truncate_window(const SampledWaveform& w,
                                                       const TruncationPolicy& policy);

} // namespace truwb
