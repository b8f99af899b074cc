#pragma once

#include <cstdint>
#include <span>

#include "topo/instance.hpp"

namespace topo {

/// Per-node sorted distance rows plus a coverage-rank matrix.
///
/// Row i holds the n-1 distances from node i to every other node in
/// ascending order (ties broken by node id), with the matching neighbor ids
/// in a parallel array. coverage(i, j) is the number of nodes node i reaches
/// with radius delta(i, j) -- with all pairwise distances distinct this is
/// simply j's 1-based position in row i, but with ties it counts every node
/// at or below that distance, which is what the interference model measures.
class SortedNeighborTable {
public:
    /// Requires n >= 2 (a single node has no neighbors to tabulate).
    static SortedNeighborTable build(const Instance& inst);

    std::size_t size() const { return n_; }

    std::span<const double> row_dists(NodeId i) const {
        return {dists_.data() + static_cast<std::size_t>(i) * (n_ - 1), n_ - 1};
    }
    std::span<const NodeId> row_ids(NodeId i) const {
        return {ids_.data() + static_cast<std::size_t>(i) * (n_ - 1), n_ - 1};
    }

    /// Sender interference of node i when its radius is set to delta(i, j).
    std::int32_t coverage(NodeId i, NodeId j) const {
        return rank_[static_cast<std::size_t>(i) * n_ + j];
    }

    /// The largest radius from {0} U row(i) whose coverage count is at most
    /// k. For k = 0 this is 0. On tie-free rows this equals the k-th
    /// smallest distance; when ties make an exact count of k unattainable it
    /// backs off to the largest radius that does not overshoot.
    double range_for_level(NodeId i, std::int32_t k) const;

private:
    SortedNeighborTable() = default;

    std::size_t n_ = 0;
    std::vector<double> dists_;       // n rows of n-1 ascending distances
    std::vector<NodeId> ids_;         // neighbor id per row entry
    std::vector<std::int32_t> rank_;  // n*n coverage counts, diagonal unused
};

/// The uniform-level assignment probed by the min-max search: every node's
/// radius is range_for_level(i, k).
RangeAssignment level_assignment(const SortedNeighborTable& table, std::int32_t k);

}  // namespace topo
