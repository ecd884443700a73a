#include "truwb/kernels.hpp"

#include <optional>
#include <stdexcept>

namespace truwb::kernels {

namespace {

std::optional<backend> forced;

backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return backend::avx2;
#endif
    return backend::scalar;
}

} // namespace

bool avx2_available() { return detect() == backend::avx2; }

backend active() {
    if (forced) return *forced;
    static const backend b = detect();
    return b;
}

void force(backend b) {
    if (b == backend::avx2 && !avx2_available())
        throw std::invalid_argument("avx2 backend not available on this CPU");
    forced = b;
}

void clear_force() { forced.reset(); }

#if defined(__x86_64__) || defined(_M_X64)
#define TRUWB_DISPATCH(call) \
    return active() == backend::avx2 ? avx2::call : scalar::call
#else
#define TRUWB_DISPATCH(call) return scalar::call
#endif

double dot(std::span<const double> a, std::span<const double> b) { TRUWB_DISPATCH(dot(a, b)); }
double sum_squares(std::span<const double> a) { TRUWB_DISPATCH(sum_squares(a)); }
double sum_abs(std::span<const double> a) { TRUWB_DISPATCH(sum_abs(a)); }
double max_abs(std::span<const double> a) { TRUWB_DISPATCH(max_abs(a)); }

void scale_inplace(std::span<double> a, double c) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == backend::avx2) { avx2::scale_inplace(a, c); return; }
#endif
    scalar::scale_inplace(a, c);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == backend::avx2) { avx2::axpy(a, x, y); return; }
#endif
    scalar::axpy(a, x, y);
}

void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == backend::avx2) { avx2::convolve_dense(x, h, out); return; }
#endif
    scalar::convolve_dense(x, h, out);
}

#undef TRUWB_DISPATCH

} // namespace truwb::kernels
