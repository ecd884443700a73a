#pragma once

#include <optional>
#include <string>

#include "truwb/waveform.hpp"

namespace truwb {

/// Instantaneous power delay profile: power[k] = s[k]^2.
struct PDP {
    std::vector<double> power; // V^2
    double sample_rate = 0.0;
    double t0 = 0.0;

    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) / sample_rate; }
};

PDP pdp(const SampledWaveform& w);

/// 10*log10(max|tr|^2 / max|direct|^2). Caller contract: both traces were
/// produced under the same transmit-power normalization.
double focusing_gain_db(const SampledWaveform& tr, const SampledWaveform& direct);

/// 10*log10(energy(tr) / energy(direct)); same normalization contract.
double energy_gain_db(const SampledWaveform& tr, const SampledWaveform& direct);

/// Peak power over the strongest power outside +-halfwidth of the global
/// peak (earliest sample wins an exact peak tie). Larger is better. Returns
/// nullopt ("no-sidelobe") when no sample lies outside the main lobe or the
/// outside region carries zero power.
std::optional<double> sidelobe_ratio_db(const SampledWaveform& tr, double mainlobe_halfwidth_s);

/// Delay span (last - first) of samples with power strictly above
/// threshold_fraction * max power.
double effective_length_s(const PDP& p, double threshold_fraction = 0.1);

/// Power-weighted standard deviation of delay.
double rms_delay_spread_s(const PDP& p);

struct MetricsReport {
    double focusing_gain_db = 0.0;
    double energy_gain_db = 0.0;
    std::optional<double> peak_to_sidelobe_db; // nullopt = no-sidelobe
    double effective_length_s = 0.0;
    double rms_delay_spread_s = 0.0;
    double peak_power = 0.0;   // V^2
    double total_energy = 0.0; // V^2*s
};

/// Scenario deltas are cross minus co throughout, so a positive
/// delta_sidelobe_db means the cross-polar run has the better (larger)
/// peak-to-sidelobe ratio.
struct ComparisonSummary {
    double delta_focusing_gain_db = 0.0;
    std::optional<double> delta_sidelobe_db;
    double delta_energy_gain_db = 0.0;
    bool cross_sidelobe_exceeds_co = false;
};

ComparisonSummary compare_scenarios(const MetricsReport& co, const MetricsReport& cross);

/// Flat key = value text block.
std::string report_text(const MetricsReport& r);
/// CSV row matching report_csv_header(); lengths in ns, full precision.
std::string report_csv_header();
std::string report_csv_row(const MetricsReport& r);

} // namespace truwb
