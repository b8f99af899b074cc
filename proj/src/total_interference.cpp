#include "topo/algorithms.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "topo/comm_graph.hpp"
#include "topo/kernels.hpp"

namespace topo {

TotalResult mtsi_broadcast(const Instance& inst, NodeId s) {
    const std::size_t n = inst.size();
    if (s >= n) throw std::invalid_argument("broadcast source out of range");

    std::vector<double> radii(n, 0.0);
    if (n > 1) {
        const auto& ops = kernels::active();
        std::vector<double> dist(n);
        ops.dist_batch(inst.xs().data(), inst.ys().data(), n,
                       inst.xs()[s], inst.ys()[s], dist.data());
        radii[s] = dist[ops.argmax(dist.data(), n)];
    }
    RangeAssignment rho{std::move(radii)};
    const std::int64_t total = interference(inst, rho).total_sender;
    assert(total == static_cast<std::int64_t>(n) - 1);
    return {std::move(rho), total};
}

TotalResult mst_baseline(const Instance& inst) {
    const std::size_t n = inst.size();
    std::vector<double> incident_max(n, 0.0);

    if (n > 1) {
        // Dense Prim; selected nodes get an infinite key so the plain argmin
        // scan skips them.
        const double inf = std::numeric_limits<double>::infinity();
        const auto& ops = kernels::active();
        std::vector<double> key(n, inf);
        std::vector<NodeId> parent(n, 0);
        std::vector<bool> in_tree(n, false);
        std::vector<double> dist(n);
        key[0] = 0.0;

        for (std::size_t added = 0; added < n; ++added) {
            const auto u = static_cast<NodeId>(ops.argmin(key.data(), n));
            if (added > 0) {
                const double w = key[u];
                incident_max[u] = std::max(incident_max[u], w);
                incident_max[parent[u]] = std::max(incident_max[parent[u]], w);
            }
            in_tree[u] = true;
            key[u] = inf;
            ops.dist_batch(inst.xs().data(), inst.ys().data(), n,
                           inst.xs()[u], inst.ys()[u], dist.data());
            for (std::size_t v = 0; v < n; ++v) {
                if (!in_tree[v] && dist[v] < key[v]) {
                    key[v] = dist[v];
                    parent[v] = u;
                }
            }
        }
    }

    RangeAssignment rho{std::move(incident_max)};
    const std::int64_t total = interference(inst, rho).total_sender;
    return {std::move(rho), total};
}

}  // namespace topo
