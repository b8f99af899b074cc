#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topo/instance.hpp"

namespace topo {

/// Directed communication graph in CSR form. Rows are sorted by target id;
/// no self-loops or parallel edges. build_graph() produces the graph induced
/// by a range assignment (edge u->v iff rho(u) >= delta(u, v)); the
/// adjacency constructor exists for tests and tools that need an arbitrary
/// digraph (the predicate checkers are defined on any digraph).
class CommGraph {
public:
    static CommGraph from_adjacency(std::size_t n,
                                    const std::vector<std::vector<NodeId>>& adj);

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return targets_.size(); }

    std::span<const NodeId> out(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::size_t out_degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Graph with every edge reversed.
    CommGraph transpose() const;

private:
    friend CommGraph build_graph(const Instance&, const RangeAssignment&);
    CommGraph() = default;

    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;  // n+1 entries
    std::vector<NodeId> targets_;
};

CommGraph build_graph(const Instance& inst, const RangeAssignment& rho);

/// Sender and receiver interference under an assignment.
/// sender[u] counts the nodes inside u's own radius (u's out-degree in the
/// communication graph); receiver[u] counts the nodes whose radius covers u
/// (u's in-degree). The totals always coincide -- both count the edges.
struct InterferenceReport {
    std::vector<std::int32_t> sender;
    std::vector<std::int32_t> receiver;
    std::int32_t max_sender = 0;
    std::int64_t total_sender = 0;
    std::int64_t total_receiver = 0;
};

InterferenceReport interference(const Instance& inst, const RangeAssignment& rho);

}  // namespace topo
