#include "topo/algorithms.hpp"

#include <cassert>
#include <cstdint>
#include <limits>

#include "topo/comm_graph.hpp"
#include "topo/geometry.hpp"
#include "topo/neighbor_table.hpp"

namespace topo {

namespace {

// Candidate for one half of a join, tracked per outside node. `value` only
// ever decreases as the tree grows, so a running (min, smallest-id argmin)
// stays exact under the two update events per iteration.
struct Best {
    std::int32_t value = std::numeric_limits<std::int32_t>::max();
    NodeId id = 0;

    void offer(std::int32_t v, NodeId candidate) {
        if (v < value || (v == value && candidate < id)) {
            value = v;
            id = candidate;
        }
    }
};

}  // namespace

// Grows the strongly connected set U1 from node 0. Each step joins an
// outside node u2 by raising one tree node's radius to reach u2 and setting
// u2's radius to reach back to some tree node, picking the triple with the
// cheapest sender-interference increment:
//
//   cost(u1, u1', u2) = cov(u1, u2) - cur(u1) + cov(u2, u1')
//
// where cov(a, b) is a's sender interference at radius delta(a, b) and
// cur(a) its count at the current radius. The two terms range over
// independent tree nodes, so per outside node it suffices to cache the best
// grow term and the best anchor term separately. Both caches only need O(1)
// work per (iteration, outside node): when w joins the tree it becomes one
// new candidate everywhere, and the one tree node whose radius grew has its
// grow term re-offered with its increased current count. Everything else is
// unchanged, which keeps the whole selection at O(n^2) total instead of the
// naive per-iteration triple scan (the equivalence is pinned by tests).
//
// Ranges never shrink: a selected grow distance below the node's current
// radius leaves the radius (and tree connectivity) untouched, while the cost
// formula still charges the raw difference of counts.
TotalResult heuristic_strong_total(const Instance& inst, GreedyTrace* trace) {
    const std::size_t n = inst.size();
    if (trace) {
        trace->steps.clear();
        trace->running_total = 0;
    }
    if (n == 1) return {RangeAssignment::zeros(1), 0};

    const SortedNeighborTable table = SortedNeighborTable::build(inst);

    std::vector<double> rho(n, 0.0);
    std::vector<std::int32_t> cur(n, 0);  // sender interference at rho, tree nodes only
    std::vector<Best> grow(n);            // min over tree of cov(u1, u2) - cur(u1)
    std::vector<Best> anchor(n);          // min over tree of cov(u2, u1')
    std::vector<NodeId> outside;          // ascending ids, so scan ties pick the smallest
    outside.reserve(n - 1);
    for (NodeId v = 1; v < n; ++v) outside.push_back(v);

    for (const NodeId u2 : outside) {
        grow[u2].offer(table.coverage(0, u2), 0);
        anchor[u2].offer(table.coverage(u2, 0), 0);
    }

    std::int64_t running = 0;
    while (!outside.empty()) {
        std::size_t pick = 0;
        std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < outside.size(); ++i) {
            const NodeId u2 = outside[i];
            const std::int64_t cost =
                static_cast<std::int64_t>(grow[u2].value) + anchor[u2].value;
            if (cost < best_cost) {
                best_cost = cost;
                pick = i;
            }
        }

        const NodeId joined = outside[pick];
        const NodeId grow_node = grow[joined].id;
        const NodeId anchor_node = anchor[joined].id;
        running += best_cost;
        if (trace) trace->steps.push_back({grow_node, anchor_node, joined, best_cost});

        // Only tree members ever get a radius, so the joined node pays its
        // full anchor count with no current-interference rebate.
        assert(rho[joined] == 0.0 && cur[joined] == 0);
        rho[grow_node] = std::max(rho[grow_node], distance(inst.point(grow_node), inst.point(joined)));
        cur[grow_node] = std::max(cur[grow_node], table.coverage(grow_node, joined));
        rho[joined] = distance(inst.point(joined), inst.point(anchor_node));
        cur[joined] = table.coverage(joined, anchor_node);

        outside.erase(outside.begin() + static_cast<std::ptrdiff_t>(pick));
        for (const NodeId u2 : outside) {
            grow[u2].offer(table.coverage(grow_node, u2) - cur[grow_node], grow_node);
            grow[u2].offer(table.coverage(joined, u2) - cur[joined], joined);
            anchor[u2].offer(table.coverage(u2, joined), joined);
        }
    }

    if (trace) trace->running_total = running;
    RangeAssignment assignment{std::move(rho)};
    const std::int64_t total = interference(inst, assignment).total_sender;
    return {std::move(assignment), total};
}

}  // namespace topo
