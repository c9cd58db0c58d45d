#include "kernels_impl.hpp"

namespace rocaware::simd {
namespace {

AboveCounts count_above_scalar(const double* scores, const std::uint8_t* labels, std::size_t n,
                               double threshold) {
    AboveCounts c;
    for (std::size_t i = 0; i < n; ++i) {
        if (scores[i] > threshold) {
            if (labels[i])
                ++c.positives;
            else
                ++c.negatives;
        }
    }
    return c;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double weighted_dot_scalar(const double* a, const double* w, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * w[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

constexpr KernelTable kScalar{Isa::scalar, "scalar", count_above_scalar, dot_scalar,
                              weighted_dot_scalar, axpy_scalar};

} // namespace

const KernelTable& scalar_kernels() { return kScalar; }

} // namespace rocaware::simd
