#pragma once

#include "truwb/acquisition.hpp"
#include "truwb/metrics.hpp"
#include "truwb/run_config.hpp"
#include "truwb/time_reversal.hpp"

namespace truwb {

/// Channel described by the config: synthetic preset, custom params, or a
/// file. Synthetic channels derive their seed from the master seed, so a
/// later command with the same config rebuilds the identical channel.
ChannelResponse make_channel(const RunConfig& c);

struct SoundingStats {
    double effective_length_s = 0.0;
    double rms_delay_spread_s = 0.0;
    double peak_power = 0.0;
    double total_energy = 0.0;
    double noise_floor = 0.0; // V^2 over the quiet tail
};

struct SoundingResult {
    ChannelResponse channel;
    AcquisitionRecord record; // direct-channel measurement at the capture rate
    SoundingStats stats;
};

/// Direct-channel sounding: impulse at the generator rate (or an ideal
/// delta), transmit normalization, upsample to the capture rate, band front
/// end, channel convolution, quiet padding, averaged noisy acquisition.
SoundingResult run_sounding(const RunConfig& c);

struct TrResult {
    TRPrefilter prefilter;
    AcquisitionRecord record; // equivalent TR channel measurement
    MetricsReport report;     // gains are TR versus the sounding record
};

/// TR leg: pre-filter from the sounding record, replayed through the same
/// front end and the true channel, then the full metrics report.
TrResult run_time_reversal(const RunConfig& c, const AcquisitionRecord& sounding,
                           const ChannelResponse& true_channel);

/// Quiet tail window of a record produced with record_padding_ns.
TimeWindow quiet_tail_window(const RunConfig& c, const SampledWaveform& w);

} // namespace truwb
