#pragma once

#include <cstddef>
#include <span>

// Arithmetic inner loops used by the DSP layer. Every kernel exists as a
// scalar reference implementation and, on x86-64 with AVX2+FMA, as a SIMD
// variant selected once at runtime. The two variants are equivalence-tested
// against each other; the scalar path is the reference.

namespace truwb::kernels {

enum class backend { scalar, avx2 };

/// Backend picked from CPU features (cached after first call).
backend active();

/// Test hook: pin the dispatched backend. Throws std::invalid_argument if
/// the requested backend is unavailable on this CPU.
void force(backend b);
void clear_force();

bool avx2_available();

double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> a);
double sum_abs(std::span<const double> a);
double max_abs(std::span<const double> a);
void scale_inplace(std::span<double> a, double c);
/// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);
/// Full linear convolution, out.size() == x.size() + h.size() - 1.
/// out is overwritten.
void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> a);
double sum_abs(std::span<const double> a);
double max_abs(std::span<const double> a);
void scale_inplace(std::span<double> a, double c);
void axpy(double a, std::span<const double> x, std::span<double> y);
void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> a);
double sum_abs(std::span<const double> a);
double max_abs(std::span<const double> a);
void scale_inplace(std::span<double> a, double c);
void axpy(double a, std::span<const double> x, std::span<double> y);
void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out);
} // namespace avx2
#endif

} // namespace truwb::kernels
