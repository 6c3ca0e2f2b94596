#include "biofab/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace biofab::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const KernelTable* avx2() { return nullptr; }
#endif

#if !(defined(__aarch64__) || defined(_M_ARM64))
const KernelTable* neon() { return nullptr; }
#endif

std::vector<const KernelTable*> available() {
    std::vector<const KernelTable*> out{&scalar()};
    if (const KernelTable* t = avx2()) out.push_back(t);
    if (const KernelTable* t = neon()) out.push_back(t);
    return out;
}

namespace {

const KernelTable& select() {
    const auto variants = available();
    if (const char* forced = std::getenv("BIOFAB_SIMD")) {
        for (const KernelTable* t : variants)
            if (t->name == std::string_view(forced)) return *t;
    }
    return *variants.back();
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace biofab::kernels
