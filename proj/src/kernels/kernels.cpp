#include "topo/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "kernels_detail.hpp"

namespace topo::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(TOPO_HAVE_AVX2_BUILD)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Ops* resolve_default() {
    if (const char* env = std::getenv("TOPOMIN_KERNELS")) {
        if (const Ops* ops = ops_by_name(env)) return ops;
    }
#if defined(TOPO_HAVE_AVX2_BUILD)
    if (cpu_has_avx2()) return &detail::avx2_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{nullptr};
    return slot;
}

}  // namespace

const Ops* ops_by_name(std::string_view name) {
    if (name == "scalar") return &scalar_ops();
#if defined(TOPO_HAVE_AVX2_BUILD)
    if (name == "avx2" && cpu_has_avx2()) return &detail::avx2_ops();
#endif
    return nullptr;
}

std::vector<const Ops*> available_ops() {
    std::vector<const Ops*> out{&scalar_ops()};
#if defined(TOPO_HAVE_AVX2_BUILD)
    if (cpu_has_avx2()) out.push_back(&detail::avx2_ops());
#endif
    return out;
}

const Ops& active() {
    const Ops* ops = active_slot().load(std::memory_order_acquire);
    if (!ops) {
        ops = resolve_default();
        active_slot().store(ops, std::memory_order_release);
    }
    return *ops;
}

bool set_active(std::string_view name) {
    const Ops* ops = ops_by_name(name);
    if (!ops) return false;
    active_slot().store(ops, std::memory_order_release);
    return true;
}

}  // namespace topo::kernels
