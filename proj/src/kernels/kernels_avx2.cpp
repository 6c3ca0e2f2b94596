// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include "biofab/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace biofab::kernels {
namespace {

// Nibble-lookup popcount (Mula et al.): per-byte counts via vpshufb, folded
// into four 64-bit lanes with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline __m256i popcount_lanes(__m256i v) {
    return _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
    const __m128i sum = _mm_add_epi64(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(sum)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(sum, 1));
}

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

template <class Combine>
std::uint64_t binary_popcount(Words a, Words b, Combine combine) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(combine(load(a.data() + i), load(b.data() + i))));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i) {
        const __m128i lane = combine(_mm_cvtsi64_si128(static_cast<long long>(a[i])),
                                     _mm_cvtsi64_si128(static_cast<long long>(b[i])));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(static_cast<std::uint64_t>(_mm_cvtsi128_si64(lane))));
    }
    return total;
}

struct AndOp {
    __m256i operator()(__m256i x, __m256i y) const { return _mm256_and_si256(x, y); }
    __m128i operator()(__m128i x, __m128i y) const { return _mm_and_si128(x, y); }
};

struct XorOp {
    __m256i operator()(__m256i x, __m256i y) const { return _mm256_xor_si256(x, y); }
    __m128i operator()(__m128i x, __m128i y) const { return _mm_xor_si128(x, y); }
};

std::uint64_t popcount_avx2(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
    return total;
}

std::uint64_t and_popcount_avx2(Words a, Words b) { return binary_popcount(a, b, AndOp{}); }

std::uint64_t xor_popcount_avx2(Words a, Words b) { return binary_popcount(a, b, XorOp{}); }

std::uint64_t adjacent_pairs_avx2(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    // The unaligned load at i + 1 needs i + 4 < n, so the last block goes scalar.
    for (; i + 5 <= n; i += 4) {
        const __m256i cur = load(a.data() + i);
        const __m256i next = load(a.data() + i + 1);
        const __m256i shifted = _mm256_or_si256(_mm256_srli_epi64(cur, 1), _mm256_slli_epi64(next, 63));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(cur, shifted)));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i) {
        const std::uint64_t next = i + 1 < n ? a[i + 1] : 0;
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & ((a[i] >> 1) | (next << 63))));
    }
    return total;
}

}  // namespace

const KernelTable* avx2() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    static const KernelTable table{"avx2", popcount_avx2, and_popcount_avx2, xor_popcount_avx2,
                                   adjacent_pairs_avx2};
    return supported ? &table : nullptr;
}

}  // namespace biofab::kernels
