#pragma once

// Bit-row kernels behind the matrix metrics and row distances.
//
// Every kernel has a portable scalar reference; vectorized variants (AVX2 on
// x86-64, NEON on AArch64) are picked at runtime and must agree with the
// scalar reference bit for bit. Setting BIOFAB_SIMD=scalar|avx2|neon in the
// environment forces a variant (unknown or unsupported names fall back to the
// best available one).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace biofab::kernels {

using Words = std::span<const std::uint64_t>;

struct KernelTable {
    std::string_view name;
    // Number of set bits.
    std::uint64_t (*popcount)(Words a);
    // popcount(a & b); a and b have equal length.
    std::uint64_t (*and_popcount)(Words a, Words b);
    // popcount(a ^ b); a and b have equal length.
    std::uint64_t (*xor_popcount)(Words a, Words b);
    // Number of positions i with bit i and bit i+1 both set, where bit i lives
    // in word i / 64 at position i % 64.
    std::uint64_t (*adjacent_pairs)(Words a);
};

const KernelTable& scalar();
// nullptr when the variant is not compiled in or the CPU lacks support.
const KernelTable* avx2();
const KernelTable* neon();

// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available();

// The variant used by the library (cached after the first call).
const KernelTable& active();

}  // namespace biofab::kernels
