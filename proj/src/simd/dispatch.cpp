#include <cassert>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace rocaware::simd {

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> out{&scalar_kernels()};
    if (auto* t = detail::avx2_table(); t && detail::avx2_supported()) out.push_back(t);
    if (auto* t = detail::neon_table()) out.push_back(t);
    return out;
}

namespace {

const KernelTable& choose() {
    auto avail = available_kernels();
    if (const char* env = std::getenv("ROCAWARE_ISA")) {
        std::string_view want(env);
        for (auto* t : avail)
            if (want == t->name) return *t;
        return scalar_kernels();
    }
    return *avail.back();
}

} // namespace

const KernelTable& active_kernels() {
    static const KernelTable& table = choose();
    return table;
}

AboveCounts count_above(std::span<const double> scores, std::span<const std::uint8_t> labels,
                        double threshold) {
    assert(scores.size() == labels.size());
    return active_kernels().count_above(scores.data(), labels.data(), scores.size(), threshold);
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    return active_kernels().dot(a.data(), b.data(), a.size());
}

double weighted_dot(std::span<const double> a, std::span<const double> w,
                    std::span<const double> b) {
    assert(a.size() == w.size() && a.size() == b.size());
    return active_kernels().weighted_dot(a.data(), w.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

} // namespace rocaware::simd
