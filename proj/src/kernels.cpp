#include "sgdqe/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SGDQE_X86 1
#endif

namespace sgdqe::kernels {

namespace scalar {

void axpy(std::size_t n, double alpha, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = alpha * x[i];
        y[i] = y[i] + t;
    }
}

void scale(std::size_t n, double alpha, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= alpha;
}

double max_abs(std::size_t n, const double* x) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = std::fabs(x[i]);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace scalar

#ifdef SGDQE_X86

namespace avx2 {

__attribute__((target("avx2"))) void axpy(std::size_t n, double alpha, const double* x,
                                          double* y) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d t0 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        __m256d t1 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i + 4));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), t0));
        _mm256_storeu_pd(y + i + 4, _mm256_add_pd(_mm256_loadu_pd(y + i + 4), t1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), t));
    }
    for (; i < n; ++i) {
        double t = alpha * x[i];
        y[i] = y[i] + t;
    }
}

__attribute__((target("avx2"))) void scale(std::size_t n, double alpha, double* y) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] *= alpha;
}

__attribute__((target("avx2"))) double max_abs(std::size_t n, const double* x) {
    // clear the sign bit; max is order independent so this matches scalar exactly
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d vm = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vm);
    double m = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] > m) m = lanes[k];
    for (; i < n; ++i) {
        double a = std::fabs(x[i]);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace avx2

bool avx2_available() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}

#else

namespace avx2 {
void axpy(std::size_t n, double alpha, const double* x, double* y) { scalar::axpy(n, alpha, x, y); }
void scale(std::size_t n, double alpha, double* y) { scalar::scale(n, alpha, y); }
double max_abs(std::size_t n, const double* x) { return scalar::max_abs(n, x); }
}  // namespace avx2

bool avx2_available() { return false; }

#endif

namespace {

Isa initial_isa() {
    const char* env = std::getenv("SGDQE_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
    current().store(isa, std::memory_order_relaxed);
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void axpy(std::size_t n, double alpha, const double* x, double* y) {
    if (active_isa() == Isa::avx2)
        avx2::axpy(n, alpha, x, y);
    else
        scalar::axpy(n, alpha, x, y);
}

void scale(std::size_t n, double alpha, double* y) {
    if (active_isa() == Isa::avx2)
        avx2::scale(n, alpha, y);
    else
        scalar::scale(n, alpha, y);
}

double max_abs(std::size_t n, const double* x) {
    return active_isa() == Isa::avx2 ? avx2::max_abs(n, x) : scalar::max_abs(n, x);
}

}  // namespace sgdqe::kernels
