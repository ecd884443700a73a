#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "truwb/channel.hpp"
#include "truwb/impulse.hpp"
#include "truwb/normalize.hpp"
#include "truwb/truncate.hpp"

namespace truwb {

enum class sounding_mode {
    pulse, // generator impulse through the band front end (physical chain)
    ideal  // unit delta, diagnostic short-circuit of the pulse shape
};

/// One fully explicit run description; `config init` emits all defaults.
struct RunConfig {
    ImpulseSpec impulse{};
    sounding_mode sounding = sounding_mode::pulse;

    // "co-polar" | "cross-polar" | "custom" | file path
    std::string channel_source = "co-polar";
    SynthChannelParams synth{}; // used when channel_source == "custom"

    double noise_sigma = 0.01; // V
    std::uint32_t n_avg = 128;

    TruncationPolicy truncation = TruncationPolicy::energy(0.99);

    power_convention convention = power_convention::equal_energy;
    double p_o = 6e-11; // default puts the sounding pulse peak near 0.5 V

    double awg_rate = 5e9;  // Hz, generator side
    double dso_rate = 40e9; // Hz, capture side

    bool band_enabled = true;
    double band_lo = 0.7e9; // Hz
    double band_hi = 2.7e9; // Hz

    double channel_window_ns = 400.0;  // max admissible channel length
    double record_padding_ns = 50.0;   // quiet tail kept after the response
    double sidelobe_halfwidth_s = 0.5e-9;

    std::uint64_t seed = 1;
    std::string out_dir = "out";
    bool quiet = false;

    // sweep grid; empty lists fall back to the scalar field above
    std::vector<std::uint64_t> sweep_seeds;
    std::vector<std::uint32_t> sweep_n_avg;
    std::vector<double> sweep_sigma;
    int jobs = 1;
};

RunConfig default_config();

/// Throws config_error naming the offending field.
void validate_config(const RunConfig& c);

std::string config_to_json(const RunConfig& c);
RunConfig config_from_json(const std::string& text);

RunConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const RunConfig& c);

} // namespace truwb
