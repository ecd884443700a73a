#pragma once

#include "truwb/acquisition.hpp"
#include "truwb/channel.hpp"
#include "truwb/normalize.hpp"
#include "truwb/truncate.hpp"
#include "truwb/waveform.hpp"

namespace truwb {

/// Transmit pre-filter: the truncated, time-reversed, resampled and
/// power-normalized channel estimate.
struct TRPrefilter {
    SampledWaveform waveform;  // t0 re-anchored to 0
    double gain_a = 1.0;       // positive scale applied by the normalization
    TimeWindow window{};       // truncation window on the estimate's axis
    double source_rate = 0.0;  // Hz, rate of the estimate
    double target_rate = 0.0;  // Hz, rate of the emitted waveform
};

/// Pipeline order is fixed: truncate -> time-reverse -> resample to
/// target_rate -> normalize, so the waveform at the generator rate is the
/// normalized artifact. Throws numeric_error if the truncated estimate has
/// no energy and std::invalid_argument for target_rate <= 0.
TRPrefilter build_prefilter(const AcquisitionRecord& h_est, const TruncationPolicy& trunc,
                            double target_rate, double p_o, power_convention convention);

/// Equivalent channel seen through the pre-filter: acquire(convolve(pf, h),
/// noise, n_avg). The prefilter is resampled to the channel rate first when
/// the rates differ. With sigma = 0, no truncation and equal rates this is
/// exactly gain_a times the channel autocorrelation.
AcquisitionRecord tr_channel_response(const TRPrefilter& pf, const ChannelResponse& h_true,
                                      const NoiseModel& noise, std::uint32_t n_avg);

/// Full linear autocorrelation R(lag) = sum_k h[k] h[k+lag], 2n-1 samples,
/// peak at the center lag, t0 = -(n-1)/rate. The negative-lag half mirrors
/// the positive half, so R(tau) == R(-tau) bit-exactly.
SampledWaveform ideal_autocorrelation(const ChannelResponse& h);

} // namespace truwb
