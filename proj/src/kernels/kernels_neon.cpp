#include "biofab/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace biofab::kernels {
namespace {

inline uint64x2_t popcount_lanes(uint64x2_t v) {
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

template <class Combine>
std::uint64_t binary_popcount(Words a, Words b, Combine combine) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2)
        acc = vaddq_u64(acc, popcount_lanes(combine(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i))));
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) {
        const uint64x2_t lane = combine(vdupq_n_u64(a[i]), vdupq_n_u64(b[i]));
        total += static_cast<std::uint64_t>(std::popcount(vgetq_lane_u64(lane, 0)));
    }
    return total;
}

std::uint64_t popcount_neon(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2) acc = vaddq_u64(acc, popcount_lanes(vld1q_u64(a.data() + i)));
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t and_popcount_neon(Words a, Words b) {
    return binary_popcount(a, b, [](uint64x2_t x, uint64x2_t y) { return vandq_u64(x, y); });
}

std::uint64_t xor_popcount_neon(Words a, Words b) {
    return binary_popcount(a, b, [](uint64x2_t x, uint64x2_t y) { return veorq_u64(x, y); });
}

std::uint64_t adjacent_pairs_neon(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 3 <= n; i += 2) {
        const uint64x2_t cur = vld1q_u64(a.data() + i);
        const uint64x2_t next = vld1q_u64(a.data() + i + 1);
        const uint64x2_t shifted = vorrq_u64(vshrq_n_u64(cur, 1), vshlq_n_u64(next, 63));
        acc = vaddq_u64(acc, popcount_lanes(vandq_u64(cur, shifted)));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) {
        const std::uint64_t next = i + 1 < n ? a[i + 1] : 0;
        total += static_cast<std::uint64_t>(std::popcount(a[i] & ((a[i] >> 1) | (next << 63))));
    }
    return total;
}

}  // namespace

const KernelTable* neon() {
    static const KernelTable table{"neon", popcount_neon, and_popcount_neon, xor_popcount_neon,
                                   adjacent_pairs_neon};
    return &table;
}

}  // namespace biofab::kernels
