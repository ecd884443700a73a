#include "truwb/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "truwb/kernels.hpp"

namespace truwb {

double SampledWaveform::energy() const {
    return kernels::sum_squares(samples) / sample_rate;
}

double SampledWaveform::mean_square() const {
    if (samples.empty()) return 0.0;
    return kernels::sum_squares(samples) / static_cast<double>(samples.size());
}

double SampledWaveform::peak_abs() const {
    return kernels::max_abs(samples);
}

void validate_waveform(const SampledWaveform& w, const char* what) {
    if (!(w.sample_rate > 0.0) || !std::isfinite(w.sample_rate))
        throw std::invalid_argument(std::string(what) + ": sample_rate must be positive and finite");
    if (w.samples.empty())
        throw std::invalid_argument(std::string(what) + ": samples must be non-empty");
    if (!std::isfinite(w.t0))
        throw std::invalid_argument(std::string(what) + ": t0 must be finite");
    for (std::size_t k = 0; k < w.samples.size(); ++k) {
        if (!std::isfinite(w.samples[k]))
            throw std::invalid_argument(std::string(what) + ": non-finite sample at index " +
                                        std::to_string(k));
    }
}

SampledWaveform time_reverse(const SampledWaveform& w) {
    SampledWaveform out;
    out.samples.assign(w.samples.rbegin(), w.samples.rend());
    out.sample_rate = w.sample_rate;
    out.t0 = 0.0;
    return out;
}

} // namespace truwb
