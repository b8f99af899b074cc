#include "topo/neighbor_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "topo/kernels.hpp"

namespace topo {

SortedNeighborTable SortedNeighborTable::build(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n < 2) throw std::invalid_argument("neighbor table requires at least 2 nodes");

    SortedNeighborTable t;
    t.n_ = n;
    t.dists_.resize(n * (n - 1));
    t.ids_.resize(n * (n - 1));
    t.rank_.assign(n * n, 0);

    const auto& ops = kernels::active();
    std::vector<double> scratch(n);
    std::vector<NodeId> order(n);

    for (std::size_t i = 0; i < n; ++i) {
        ops.dist_batch(inst.xs().data(), inst.ys().data(), n,
                       inst.xs()[i], inst.ys()[i], scratch.data());
        order.resize(n);
        std::iota(order.begin(), order.end(), NodeId{0});
        order.erase(order.begin() + static_cast<std::ptrdiff_t>(i));
        std::sort(order.begin(), order.end(), [&scratch](NodeId a, NodeId b) {
            if (scratch[a] != scratch[b]) return scratch[a] < scratch[b];
            return a < b;
        });

        double* row_d = t.dists_.data() + i * (n - 1);
        NodeId* row_i = t.ids_.data() + i * (n - 1);
        for (std::size_t k = 0; k < n - 1; ++k) {
            row_d[k] = scratch[order[k]];
            row_i[k] = order[k];
        }

        // Coverage rank: every entry in a run of equal distances gets the
        // count at the end of the run.
        std::int32_t* rank_row = t.rank_.data() + i * n;
        std::size_t run_start = 0;
        while (run_start < n - 1) {
            std::size_t run_end = run_start + 1;
            while (run_end < n - 1 && row_d[run_end] == row_d[run_start]) ++run_end;
            for (std::size_t k = run_start; k < run_end; ++k) {
                rank_row[row_i[k]] = static_cast<std::int32_t>(run_end);
            }
            run_start = run_end;
        }
    }
    return t;
}

double SortedNeighborTable::range_for_level(NodeId i, std::int32_t k) const {
    if (k < 0 || static_cast<std::size_t>(k) > n_ - 1) {
        throw std::invalid_argument("interference level out of [0, n-1]");
    }
    if (k == 0) return 0.0;
    const auto dists = row_dists(i);
    const auto ids = row_ids(i);
    // Coverage counts are non-decreasing along the row and count(t) >= t+1,
    // so no entry past k-1 can qualify; walk back over any tie run.
    std::ptrdiff_t t = k - 1;
    while (t >= 0 && coverage(i, ids[static_cast<std::size_t>(t)]) > k) --t;
    return t < 0 ? 0.0 : dists[static_cast<std::size_t>(t)];
}

RangeAssignment level_assignment(const SortedNeighborTable& table, std::int32_t k) {
    std::vector<double> radii(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        radii[i] = table.range_for_level(static_cast<NodeId>(i), k);
    }
    return RangeAssignment(std::move(radii));
}

}  // namespace topo
