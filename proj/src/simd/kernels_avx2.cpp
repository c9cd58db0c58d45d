#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define ROCAWARE_HAVE_AVX2 1
#include <immintrin.h>

#include <cstring>
#endif

namespace rocaware::simd::detail {

#if ROCAWARE_HAVE_AVX2
namespace {

// Functions carry the target attribute instead of the TU being built with
// -mavx2, so no inline code from shared headers gets compiled for AVX2.
#define AVX2_FN __attribute__((target("avx2,fma,popcnt")))

AVX2_FN inline int label_mask4(const std::uint8_t* labels) {
    std::uint32_t word;
    std::memcpy(&word, labels, sizeof word);
    __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(word)));
    __m256i nonzero = _mm256_cmpgt_epi64(wide, _mm256_setzero_si256());
    return _mm256_movemask_pd(_mm256_castsi256_pd(nonzero));
}

AVX2_FN AboveCounts count_above_avx2(const double* scores, const std::uint8_t* labels,
                                     std::size_t n, double threshold) {
    const __m256d tv = _mm256_set1_pd(threshold);
    std::size_t pos = 0, neg = 0, i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(scores + i);
        int gt = _mm256_movemask_pd(_mm256_cmp_pd(v, tv, _CMP_GT_OQ));
        int lab = label_mask4(labels + i);
        pos += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(gt & lab)));
        neg += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(gt & ~lab & 0xF)));
    }
    for (; i < n; ++i) {
        if (scores[i] > threshold) {
            if (labels[i])
                ++pos;
            else
                ++neg;
        }
    }
    return {pos, neg};
}

AVX2_FN inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

AVX2_FN double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

AVX2_FN double weighted_dot_avx2(const double* a, const double* w, const double* b,
                                 std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d aw0 = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(w + i));
        __m256d aw1 = _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(w + i + 4));
        acc0 = _mm256_fmadd_pd(aw0, _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(aw1, _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d aw = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(w + i));
        acc0 = _mm256_fmadd_pd(aw, _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * w[i] * b[i];
    return s;
}

AVX2_FN void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

#undef AVX2_FN

constexpr KernelTable kAvx2{Isa::avx2, "avx2", count_above_avx2, dot_avx2, weighted_dot_avx2,
                            axpy_avx2};

} // namespace

const KernelTable* avx2_table() { return &kAvx2; }

bool avx2_supported() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
           __builtin_cpu_supports("popcnt");
}

#else

const KernelTable* avx2_table() { return nullptr; }
bool avx2_supported() { return false; }

#endif

} // namespace rocaware::simd::detail
