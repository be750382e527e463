#include "cyclo/gf2.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CYCLO_GF2_HAVE_AVX2_BUILD 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#define CYCLO_GF2_HAVE_NEON_BUILD 1
#endif

namespace cyclo::gf2 {

void xor_words_scalar(Word* dst, const Word* src, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) dst[i] ^= src[i];
}

#if defined(CYCLO_GF2_HAVE_AVX2_BUILD)
__attribute__((target("avx2"))) static void xor_words_avx2(Word* dst, const Word* src,
                                                           std::size_t count) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < count; ++i) dst[i] ^= src[i];
}
#endif

#if defined(CYCLO_GF2_HAVE_NEON_BUILD)
static void xor_words_neon(Word* dst, const Word* src, std::size_t count) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const uint64x2_t a = vld1q_u64(dst + i);
        const uint64x2_t b = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(a, b));
    }
    for (; i < count; ++i) dst[i] ^= src[i];
}
#endif

bool kernel_available(Kernel k) {
    switch (k) {
        case Kernel::scalar: return true;
        case Kernel::avx2:
#if defined(CYCLO_GF2_HAVE_AVX2_BUILD)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Kernel::neon:
#if defined(CYCLO_GF2_HAVE_NEON_BUILD)
            return true;
#else
            return false;
#endif
    }
    return false;
}

namespace {

Kernel pick_automatic() {
    if (const char* env = std::getenv("CYCLO_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Kernel::scalar;
        if (want == "avx2" && kernel_available(Kernel::avx2)) return Kernel::avx2;
        if (want == "neon" && kernel_available(Kernel::neon)) return Kernel::neon;
        if (want != "auto" && want != "")
            throw std::runtime_error("CYCLO_SIMD: kernel '" + want +
                                     "' unknown or unavailable on this CPU");
    }
    if (kernel_available(Kernel::avx2)) return Kernel::avx2;
    if (kernel_available(Kernel::neon)) return Kernel::neon;
    return Kernel::scalar;
}

std::atomic<int> g_forced{-1};

Kernel current() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Kernel>(forced);
    static const Kernel automatic = pick_automatic();
    return automatic;
}

} // namespace

Kernel active_kernel() { return current(); }

std::string kernel_name(Kernel k) {
    switch (k) {
        case Kernel::scalar: return "scalar";
        case Kernel::avx2: return "avx2";
        case Kernel::neon: return "neon";
    }
    return "?";
}

void force_kernel(Kernel k) {
    if (!kernel_available(k))
        throw std::runtime_error("gf2 kernel '" + kernel_name(k) + "' unavailable on this CPU");
    g_forced.store(static_cast<int>(k), std::memory_order_relaxed);
}

void reset_kernel() { g_forced.store(-1, std::memory_order_relaxed); }

void xor_words(Word* dst, const Word* src, std::size_t count) {
    switch (current()) {
#if defined(CYCLO_GF2_HAVE_AVX2_BUILD)
        case Kernel::avx2: xor_words_avx2(dst, src, count); return;
#endif
#if defined(CYCLO_GF2_HAVE_NEON_BUILD)
        case Kernel::neon: xor_words_neon(dst, src, count); return;
#endif
        default: xor_words_scalar(dst, src, count); return;
    }
}

std::int64_t rank(const SparseIntMatrix& m) {
    const std::size_t words = (static_cast<std::size_t>(m.rows()) + 63) / 64;
    if (words == 0 || m.cols() == 0) return 0;
    std::vector<std::vector<Word>> pivot_cols(static_cast<std::size_t>(m.rows()));
    std::vector<char> has_pivot(static_cast<std::size_t>(m.rows()), 0);
    std::vector<Word> column(words);
    std::int64_t rank = 0;

    for (std::int64_t c = 0; c < m.cols(); ++c) {
        std::fill(column.begin(), column.end(), 0);
        auto rows = m.col_rows(c);
        auto vals = m.col_values(c);
        bool any = false;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (vals[k] % 2 == 0) continue;
            column[static_cast<std::size_t>(rows[k]) / 64] |=
                Word{1} << (static_cast<std::size_t>(rows[k]) % 64);
            any = true;
        }
        if (!any) continue;
        // Reduce by claimed pivots; a pivot's lowest bit is its pivot row,
        // so bits below the scan point never reappear.
        std::size_t w = 0;
        for (;;) {
            while (w < words && column[w] == 0) ++w;
            if (w == words) break;
            const std::size_t low =
                w * 64 + static_cast<std::size_t>(std::countr_zero(column[w]));
            if (!has_pivot[low]) {
                has_pivot[low] = 1;
                pivot_cols[low] = column;
                ++rank;
                break;
            }
            xor_words(column.data() + w, pivot_cols[low].data() + w, words - w);
        }
    }
    return rank;
}

} // namespace cyclo::gf2
