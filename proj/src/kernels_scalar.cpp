#include <algorithm>
#include <cmath>

#include "truwb/kernels.hpp"

namespace truwb::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = std::min(a.size(), b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_squares(std::span<const double> a) {
    double acc = 0.0;
    for (double v : a) acc += v * v;
    return acc;
}

double sum_abs(std::span<const double> a) {
    double acc = 0.0;
    for (double v : a) acc += std::fabs(v);
    return acc;
}

double max_abs(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

void scale_inplace(std::span<double> a, double c) {
    for (double& v : a) v *= c;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        double* o = out.data() + i;
        for (std::size_t j = 0; j < h.size(); ++j) o[j] += xi * h[j];
    }
}

} // namespace truwb::kernels::scalar
