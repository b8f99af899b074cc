#include "topo/comm_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "topo/kernels.hpp"

namespace topo {

CommGraph CommGraph::from_adjacency(std::size_t n,
                                    const std::vector<std::vector<NodeId>>& adj) {
    if (adj.size() != n) throw std::invalid_argument("adjacency size mismatch");
    CommGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        g.offsets_[u + 1] = g.offsets_[u] + adj[u].size();
    }
    g.targets_.reserve(g.offsets_[n]);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<NodeId> row = adj[u];
        std::sort(row.begin(), row.end());
        for (std::size_t k = 0; k < row.size(); ++k) {
            const NodeId v = row[k];
            if (v >= n) throw std::invalid_argument("edge target out of range");
            if (v == u) throw std::invalid_argument("self-loop rejected");
            if (k > 0 && row[k - 1] == v) throw std::invalid_argument("parallel edge rejected");
            g.targets_.push_back(v);
        }
    }
    return g;
}

bool CommGraph::has_edge(NodeId u, NodeId v) const {
    const auto row = out(u);
    return std::binary_search(row.begin(), row.end(), v);
}

CommGraph CommGraph::transpose() const {
    CommGraph t;
    t.n_ = n_;
    t.offsets_.assign(n_ + 1, 0);
    for (const NodeId v : targets_) ++t.offsets_[v + 1];
    for (std::size_t i = 0; i < n_; ++i) t.offsets_[i + 1] += t.offsets_[i];
    t.targets_.resize(targets_.size());
    std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
    for (std::size_t u = 0; u < n_; ++u) {
        for (const NodeId v : out(static_cast<NodeId>(u))) {
            t.targets_[cursor[v]++] = static_cast<NodeId>(u);
        }
    }
    return t;
}

CommGraph build_graph(const Instance& inst, const RangeAssignment& rho) {
    const std::size_t n = inst.size();
    if (rho.size() != n) {
        throw std::invalid_argument("range assignment length does not match instance");
    }
    const auto& ops = kernels::active();

    CommGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    std::vector<double> dist(n);
    for (std::size_t u = 0; u < n; ++u) {
        ops.dist_batch(inst.xs().data(), inst.ys().data(), n,
                       inst.xs()[u], inst.ys()[u], dist.data());
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u && dist[v] <= rho[u]) g.targets_.push_back(static_cast<NodeId>(v));
        }
        g.offsets_[u + 1] = g.targets_.size();
    }
    return g;
}

InterferenceReport interference(const Instance& inst, const RangeAssignment& rho) {
    const std::size_t n = inst.size();
    if (rho.size() != n) {
        throw std::invalid_argument("range assignment length does not match instance");
    }
    const auto& ops = kernels::active();

    InterferenceReport rep;
    rep.sender.resize(n);
    rep.receiver.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        const double px = inst.xs()[u];
        const double py = inst.ys()[u];
        // Node u itself sits at distance 0 and every radius is >= 0, so both
        // counts include it; drop it.
        const std::size_t within =
            ops.count_within(inst.xs().data(), inst.ys().data(), n, px, py, rho[u]);
        const std::size_t covered = ops.count_covered(
            inst.xs().data(), inst.ys().data(), rho.values().data(), n, px, py);
        rep.sender[u] = static_cast<std::int32_t>(within) - 1;
        rep.receiver[u] = static_cast<std::int32_t>(covered) - 1;
        rep.total_sender += rep.sender[u];
        rep.total_receiver += rep.receiver[u];
        rep.max_sender = std::max(rep.max_sender, rep.sender[u]);
    }
    assert(rep.total_sender == rep.total_receiver);
    return rep;
}

}  // namespace topo
