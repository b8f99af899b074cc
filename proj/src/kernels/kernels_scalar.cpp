#include "topo/kernels.hpp"

#include <cassert>
#include <cmath>

// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against, down to the bit: squares are kept as separate multiplies
// (the build disables FP contraction) and sqrt is the correctly rounded
// IEEE operation on every target.

namespace topo::kernels {

namespace {

void dist_batch_scalar(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        out[i] = std::sqrt(dx * dx + dy * dy);
    }
}

std::size_t count_within_scalar(const double* xs, const double* ys, std::size_t n,
                                double px, double py, double r) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        count += std::sqrt(dx * dx + dy * dy) <= r ? 1 : 0;
    }
    return count;
}

std::size_t count_covered_scalar(const double* xs, const double* ys,
                                 const double* radii, std::size_t n,
                                 double px, double py) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        count += std::sqrt(dx * dx + dy * dy) <= radii[i] ? 1 : 0;
    }
    return count;
}

std::size_t argmin_scalar(const double* v, std::size_t n) {
    assert(n >= 1);
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] < v[best]) best = i;
    }
    return best;
}

std::size_t argmax_scalar(const double* v, std::size_t n) {
    assert(n >= 1);
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",
        dist_batch_scalar,
        count_within_scalar,
        count_covered_scalar,
        argmin_scalar,
        argmax_scalar,
    };
    return ops;
}

}  // namespace topo::kernels
