#pragma once

#include <cstdint>
#include <vector>

namespace topo::detail {

// Dinic's algorithm on small unit-capacity networks. Supports a flow limit
// so connectivity probes can stop as soon as k augmenting paths exist.
class Dinic {
public:
    explicit Dinic(std::size_t n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(std::size_t u, std::size_t v, std::int32_t cap) {
        edges_.push_back({static_cast<std::int32_t>(v), cap, head_[u]});
        head_[u] = static_cast<std::int32_t>(edges_.size()) - 1;
        edges_.push_back({static_cast<std::int32_t>(u), 0, head_[v]});
        head_[v] = static_cast<std::int32_t>(edges_.size()) - 1;
    }

    std::int32_t max_flow(std::size_t s, std::size_t t, std::int32_t limit) {
        std::int32_t flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter_ = head_;
            while (flow < limit) {
                const std::int32_t pushed =
                    dfs(static_cast<std::int32_t>(s), static_cast<std::int32_t>(t),
                        limit - flow);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

private:
    struct Edge {
        std::int32_t to;
        std::int32_t cap;
        std::int32_t next;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        queue_.clear();
        queue_.push_back(static_cast<std::int32_t>(s));
        level_[s] = 0;
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::int32_t u = queue_[qi];
            for (std::int32_t e = head_[static_cast<std::size_t>(u)]; e != -1;
                 e = edges_[static_cast<std::size_t>(e)].next) {
                const Edge& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] == -1) {
                    level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    queue_.push_back(ed.to);
                }
            }
        }
        return level_[t] != -1;
    }

    std::int32_t dfs(std::int32_t u, std::int32_t t, std::int32_t want) {
        if (u == t) return want;
        for (std::int32_t& e = iter_[static_cast<std::size_t>(u)]; e != -1;
             e = edges_[static_cast<std::size_t>(e)].next) {
            Edge& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.cap <= 0 ||
                level_[static_cast<std::size_t>(ed.to)] != level_[static_cast<std::size_t>(u)] + 1) {
                continue;
            }
            const std::int32_t got = dfs(ed.to, t, std::min(want, ed.cap));
            if (got > 0) {
                ed.cap -= got;
                edges_[static_cast<std::size_t>(e ^ 1)].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<std::int32_t> head_;
    std::vector<std::int32_t> level_;
    std::vector<std::int32_t> iter_;
    std::vector<std::int32_t> queue_;
};

}  // namespace topo::detail
