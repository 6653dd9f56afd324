#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nfd::fftcore {
struct Plan;
}

namespace nfd::kernels {

/// Dispatch table for the data-parallel inner loops. Every entry has a scalar
/// reference implementation and (on x86-64 with AVX2) a vector variant. The
/// two variants are bitwise-equivalent by construction: no FMA contraction,
/// and reductions use a fixed 4-way interleaved accumulation pattern in both
/// backends so the summation order is identical.
struct Table {
    const char* name;

    // dst[i] = a[i] op b[i]
    void (*add)(const double* a, const double* b, double* dst, std::size_t n);
    void (*sub)(const double* a, const double* b, double* dst, std::size_t n);
    void (*mul)(const double* a, const double* b, double* dst, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x[i] *= a
    void (*scale)(double a, double* x, std::size_t n);
    // 4-way interleaved reductions
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sumsq)(const double* a, std::size_t n);
    // bias-corrected Adam update; bc1 = 1-beta1^t, bc2 = 1-beta2^t
    void (*adam_update)(double* p, double* m, double* v, const double* g, std::size_t n,
                        double lr, double beta1, double beta2, double eps, double bc1, double bc2);
    // mixed-radix FFT over a lane-major workspace [n][4]; result in (sre, sim)
    void (*fft_lanes)(double* wre, double* wim, double* sre, double* sim,
                      const fftcore::Plan& plan, bool inverse);
};

/// The active table. Chosen once: NFD_KERNELS=scalar|avx2 overrides the cpuid
/// default.
const Table& active();

/// Named table for equivalence tests. Throws ConfigError for unknown names.
const Table& by_name(const std::string& name);

std::vector<std::string> available();

}  // namespace nfd::kernels
