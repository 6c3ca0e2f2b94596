#include "biofab/kernels.hpp"

#include <bit>

namespace biofab::kernels {
namespace {

std::uint64_t popcount_scalar(Words a) {
    std::uint64_t total = 0;
    for (std::uint64_t w : a) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t and_popcount_scalar(Words a, Words b) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t xor_popcount_scalar(Words a, Words b) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return total;
}

std::uint64_t adjacent_pairs_scalar(Words a) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t next = i + 1 < a.size() ? a[i + 1] : 0;
        const std::uint64_t shifted = (a[i] >> 1) | (next << 63);
        total += static_cast<std::uint64_t>(std::popcount(a[i] & shifted));
    }
    return total;
}

}  // namespace

const KernelTable& scalar() {
    static const KernelTable table{"scalar", popcount_scalar, and_popcount_scalar,
                                   xor_popcount_scalar, adjacent_pairs_scalar};
    return table;
}

}  // namespace biofab::kernels
