#pragma once

#include <filesystem>

#include "truwb/channel.hpp"
#include "truwb/waveform.hpp"

namespace truwb {

// Binary trace format: magic "TRUW", version u16 LE, sample_rate f64 LE,
// t0 f64 LE, sample count u64 LE, then samples f64 LE. CSV alternative:
// header "time_s,amplitude_v", one sample per row, uniform spacing required
// (validated to 1e-9 relative). Both round-trip bit-exactly.

void save_trace_binary(const std::filesystem::path& path, const SampledWaveform& w);
SampledWaveform load_trace_binary(const std::filesystem::path& path);

void save_trace_csv(const std::filesystem::path& path, const SampledWaveform& w);
SampledWaveform load_trace_csv(const std::filesystem::path& path);

/// Binary when the file starts with the TRUW magic, CSV otherwise.
SampledWaveform load_trace(const std::filesystem::path& path);

void save_channel(const std::filesystem::path& path, const ChannelResponse& ch);
/// Loads either format; scenario comes back as custom, label = filename.
ChannelResponse load_channel(const std::filesystem::path& path);

} // namespace truwb
