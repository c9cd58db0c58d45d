#include "kernels_impl.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define ROCAWARE_HAVE_NEON 1
#include <arm_neon.h>
#endif

namespace rocaware::simd::detail {

#if ROCAWARE_HAVE_NEON
namespace {

AboveCounts count_above_neon(const double* scores, const std::uint8_t* labels, std::size_t n,
                             double threshold) {
    const float64x2_t tv = vdupq_n_f64(threshold);
    uint64x2_t pos = vdupq_n_u64(0);
    uint64x2_t neg = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t gt = vcgtq_f64(vld1q_f64(scores + i), tv);
        const std::uint64_t lab_arr[2] = {labels[i] ? ~0ull : 0ull, labels[i + 1] ? ~0ull : 0ull};
        uint64x2_t lab = vld1q_u64(lab_arr);
        pos = vaddq_u64(pos, vshrq_n_u64(vandq_u64(gt, lab), 63));
        neg = vaddq_u64(neg, vshrq_n_u64(vbicq_u64(gt, lab), 63));
    }
    std::size_t p = vgetq_lane_u64(pos, 0) + vgetq_lane_u64(pos, 1);
    std::size_t q = vgetq_lane_u64(neg, 0) + vgetq_lane_u64(neg, 1);
    for (; i < n; ++i) {
        if (scores[i] > threshold) {
            if (labels[i])
                ++p;
            else
                ++q;
        }
    }
    return {p, q};
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double weighted_dot_neon(const double* a, const double* w, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t aw = vmulq_f64(vld1q_f64(a + i), vld1q_f64(w + i));
        acc = vfmaq_f64(acc, aw, vld1q_f64(b + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * w[i] * b[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

constexpr KernelTable kNeon{Isa::neon, "neon", count_above_neon, dot_neon, weighted_dot_neon,
                            axpy_neon};

} // namespace

const KernelTable* neon_table() { return &kNeon; }

#else

const KernelTable* neon_table() { return nullptr; }

#endif

} // namespace rocaware::simd::detail
