#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace topo::kernels {

// Data-parallel inner loops shared by the geometric modules. Each kernel has
// a scalar reference implementation and, on x86-64, an AVX2 variant selected
// at runtime. All variants are required to produce bit-identical results:
// distances are evaluated as sqrt(dx*dx + dy*dy) with no FMA contraction and
// comparisons are IEEE <=, so the equivalence tests assert exact equality.
struct Ops {
    const char* name;

    // out[i] = distance from (px, py) to (xs[i], ys[i])
    void (*dist_batch)(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* out);

    // |{ i : distance((px,py), (xs[i],ys[i])) <= r }|
    std::size_t (*count_within)(const double* xs, const double* ys, std::size_t n,
                                double px, double py, double r);

    // |{ i : distance((px,py), (xs[i],ys[i])) <= radii[i] }|
    std::size_t (*count_covered)(const double* xs, const double* ys,
                                 const double* radii, std::size_t n,
                                 double px, double py);

    // Index of the first minimum / maximum element. Requires n >= 1.
    std::size_t (*argmin)(const double* v, std::size_t n);
    std::size_t (*argmax)(const double* v, std::size_t n);
};

/// The scalar reference implementation (always available).
const Ops& scalar_ops();

/// Look up an implementation by name ("scalar", "avx2"). Returns nullptr if
/// the name is unknown, not compiled in, or the CPU lacks the instruction set.
const Ops* ops_by_name(std::string_view name);

/// Every implementation usable on this machine, scalar first.
std::vector<const Ops*> available_ops();

/// The implementation in use. Resolved on first call: the TOPOMIN_KERNELS
/// environment variable wins if set to an available name, otherwise the
/// widest instruction set the CPU supports.
const Ops& active();

/// Force a specific implementation (CLI --kernels, tests). Returns false and
/// leaves the active implementation unchanged if `name` is unavailable.
bool set_active(std::string_view name);

}  // namespace topo::kernels
