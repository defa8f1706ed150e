#pragma once

#include <cstddef>

// Vector kernels behind the dense routines. Each has a scalar reference and an
// AVX2 variant; the active one is picked once from CPUID. The AVX2 code does
// separate multiply and add so both paths round identically.
namespace sgdqe::kernels {

enum class Isa { scalar, avx2 };

Isa active_isa();
bool avx2_available();
// Force a path (tests, benchmarking). Requesting avx2 on a CPU without it
// falls back to scalar. Returns the path actually selected.
Isa select_isa(Isa isa);
const char* isa_name(Isa isa);

// y[i] += alpha * x[i]
void axpy(std::size_t n, double alpha, const double* x, double* y);
// y[i] *= alpha
void scale(std::size_t n, double alpha, double* y);
// max |x[i]|
double max_abs(std::size_t n, const double* x);

namespace scalar {
void axpy(std::size_t n, double alpha, const double* x, double* y);
void scale(std::size_t n, double alpha, double* y);
double max_abs(std::size_t n, const double* x);
}  // namespace scalar

namespace avx2 {
void axpy(std::size_t n, double alpha, const double* x, double* y);
void scale(std::size_t n, double alpha, double* y);
double max_abs(std::size_t n, const double* x);
}  // namespace avx2

}  // namespace sgdqe::kernels
