#include "kernels_detail.hpp"

#include <immintrin.h>

#include <cstdint>

// AVX2 variants, 4 doubles per step. Arithmetic mirrors the scalar kernels
// exactly: separate multiplies, one add, _mm256_sqrt_pd (correctly rounded,
// same as sqrtsd), ordered non-signaling compares. Tails are delegated to
// the scalar reference so the two paths cannot drift apart.

namespace topo::kernels {

namespace {

inline __m256d dist4(__m256d x, __m256d y, __m256d px, __m256d py) {
    const __m256d dx = _mm256_sub_pd(x, px);
    const __m256d dy = _mm256_sub_pd(y, py);
    return _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
}

void dist_batch_avx2(const double* xs, const double* ys, std::size_t n,
                     double px, double py, double* out) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = dist4(_mm256_loadu_pd(xs + i), _mm256_loadu_pd(ys + i), vpx, vpy);
        _mm256_storeu_pd(out + i, d);
    }
    if (i < n) scalar_ops().dist_batch(xs + i, ys + i, n - i, px, py, out + i);
}

std::size_t count_within_avx2(const double* xs, const double* ys, std::size_t n,
                              double px, double py, double r) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d vr = _mm256_set1_pd(r);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = dist4(_mm256_loadu_pd(xs + i), _mm256_loadu_pd(ys + i), vpx, vpy);
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(d, vr, _CMP_LE_OQ));
        count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
    if (i < n) count += scalar_ops().count_within(xs + i, ys + i, n - i, px, py, r);
    return count;
}

std::size_t count_covered_avx2(const double* xs, const double* ys,
                               const double* radii, std::size_t n,
                               double px, double py) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = dist4(_mm256_loadu_pd(xs + i), _mm256_loadu_pd(ys + i), vpx, vpy);
        const __m256d vr = _mm256_loadu_pd(radii + i);
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(d, vr, _CMP_LE_OQ));
        count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
    if (i < n) count += scalar_ops().count_covered(xs + i, ys + i, radii + i, n - i, px, py);
    return count;
}

// Lane-wise running extremum with index tracking. Strict compares keep the
// first occurrence within each lane; the horizontal reduce breaks value ties
// by the smaller index, which together yield first-occurrence semantics.
template <bool Max>
std::size_t argext_avx2(const double* v, std::size_t n) {
    if (n < 8) {
        return Max ? scalar_ops().argmax(v, n) : scalar_ops().argmin(v, n);
    }
    __m256d best = _mm256_loadu_pd(v);
    __m256i best_idx = _mm256_setr_epi64x(0, 1, 2, 3);
    __m256i idx = best_idx;
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        idx = _mm256_add_epi64(idx, step);
        const __m256d val = _mm256_loadu_pd(v + i);
        const __m256d better = Max ? _mm256_cmp_pd(val, best, _CMP_GT_OQ)
                                   : _mm256_cmp_pd(val, best, _CMP_LT_OQ);
        best = _mm256_blendv_pd(best, val, better);
        best_idx = _mm256_castpd_si256(_mm256_blendv_pd(
            _mm256_castsi256_pd(best_idx), _mm256_castsi256_pd(idx), better));
    }
    alignas(32) double lane_val[4];
    alignas(32) std::int64_t lane_idx[4];
    _mm256_store_pd(lane_val, best);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_idx), best_idx);
    double best_v = lane_val[0];
    std::size_t best_i = static_cast<std::size_t>(lane_idx[0]);
    for (int lane = 1; lane < 4; ++lane) {
        const double val = lane_val[lane];
        const std::size_t vi = static_cast<std::size_t>(lane_idx[lane]);
        const bool better = Max ? val > best_v : val < best_v;
        if (better || (val == best_v && vi < best_i)) {
            best_v = val;
            best_i = vi;
        }
    }
    if (i < n) {
        const std::size_t t = i + (Max ? scalar_ops().argmax(v + i, n - i)
                                       : scalar_ops().argmin(v + i, n - i));
        if (Max ? v[t] > best_v : v[t] < best_v) best_i = t;
    }
    return best_i;
}

}  // namespace

namespace detail {

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",
        dist_batch_avx2,
        count_within_avx2,
        count_covered_avx2,
        argext_avx2<false>,
        argext_avx2<true>,
    };
    return ops;
}

}  // namespace detail

}  // namespace topo::kernels
