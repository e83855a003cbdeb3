#include <atomic>
#include <cstdlib>
#include <string_view>

#include "numrad/kernels.hpp"

namespace numrad::kernels {
namespace {

const KernelTable* resolve() noexcept {
    if (const char* env = std::getenv("NUMRAD_ISA"); env && std::string_view(env) == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable* t = avx2_table()) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
    static std::atomic<const KernelTable*> current{resolve()};
    return current;
}

}  // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

bool select(Isa isa) noexcept {
    const KernelTable* t = isa == Isa::scalar ? &scalar_table() : avx2_table();
    if (t == nullptr) {
        return false;
    }
    slot().store(t, std::memory_order_release);
    return true;
}

}  // namespace numrad::kernels
