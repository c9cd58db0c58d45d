#pragma once

// Data-parallel inner loops used by the confusion tally and the IRLS fitter.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64, chosen at
// runtime from cpuid) and NEON (aarch64) variants must agree with it: exactly
// for the integer tally, and to rounding for the floating reductions. The
// variant used by the library is picked once per process; ROCAWARE_ISA
// (scalar|avx2|neon) overrides the choice when that variant is available.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rocaware::simd {

enum class Isa { scalar, avx2, neon };

struct AboveCounts {
    std::size_t positives = 0;
    std::size_t negatives = 0;

    friend bool operator==(const AboveCounts&, const AboveCounts&) = default;
};

struct KernelTable {
    Isa isa;
    const char* name;
    // Items with scores[i] > threshold, split by labels[i] != 0.
    AboveCounts (*count_above)(const double* scores, const std::uint8_t* labels, std::size_t n,
                               double threshold);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i a[i] * w[i] * b[i]
    double (*weighted_dot)(const double* a, const double* w, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

// Variants compiled in and supported by the running CPU, scalar first.
std::vector<const KernelTable*> available_kernels();

const KernelTable& active_kernels();

AboveCounts count_above(std::span<const double> scores, std::span<const std::uint8_t> labels,
                        double threshold);
double dot(std::span<const double> a, std::span<const double> b);
double weighted_dot(std::span<const double> a, std::span<const double> w,
                    std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

} // namespace rocaware::simd
