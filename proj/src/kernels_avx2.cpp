#include "truwb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace truwb::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

} // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = std::min(a.size(), b.size());
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_squares(std::span<const double> a) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= a.size(); i += 4) {
        __m256d v = _mm256_loadu_pd(a.data() + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < a.size(); ++i) s += a[i] * a[i];
    return s;
}

double sum_abs(std::span<const double> a) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= a.size(); i += 4)
        acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a.data() + i), abs_mask));
    double s = hsum(acc);
    for (; i < a.size(); ++i) s += std::fabs(a[i]);
    return s;
}

double max_abs(std::span<const double> a) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= a.size(); i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a.data() + i), abs_mask));
    double m = hmax(acc);
    for (; i < a.size(); ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

void scale_inplace(std::span<double> a, double c) {
    const __m256d cv = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= a.size(); i += 4)
        _mm256_storeu_pd(a.data() + i, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), cv));
    for (; i < a.size(); ++i) a[i] *= c;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = std::min(x.size(), y.size());
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yi = _mm256_loadu_pd(y.data() + i);
        yi = _mm256_fmadd_pd(av, _mm256_loadu_pd(x.data() + i), yi);
        _mm256_storeu_pd(y.data() + i, yi);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void convolve_dense(std::span<const double> x, std::span<const double> h,
                    std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        axpy(x[i], h, out.subspan(i, h.size()));
}

} // namespace truwb::kernels::avx2

#endif // x86-64
