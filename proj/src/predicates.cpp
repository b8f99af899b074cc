#include "topo/predicates.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>

#include "max_flow.hpp"
#include "topo/geometry.hpp"

namespace topo {

namespace {

std::size_t reachable_count(const CommGraph& g, NodeId s) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> stack{s};
    seen[s] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const NodeId v : g.out(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

std::int32_t flow_between(const CommGraph& g, NodeId s, NodeId t, std::int32_t limit) {
    detail::Dinic net(g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        for (const NodeId v : g.out(static_cast<NodeId>(u))) net.add_edge(u, v, 1);
    }
    return net.max_flow(s, t, limit);
}

// Vertex-split network: in(i) = 2i, out(i) = 2i+1, unit arc across each
// split, unit arc out(a) -> in(b) per graph edge. Internally vertex-disjoint
// paths from u to v correspond to flow from out(u) to in(v).
std::int32_t vertex_flow_between(const CommGraph& g, NodeId s, NodeId t,
                                 std::int32_t limit) {
    const std::size_t n = g.node_count();
    detail::Dinic net(2 * n);
    for (std::size_t i = 0; i < n; ++i) net.add_edge(2 * i, 2 * i + 1, 1);
    for (std::size_t u = 0; u < n; ++u) {
        for (const NodeId v : g.out(static_cast<NodeId>(u))) {
            net.add_edge(2 * u + 1, 2 * static_cast<std::size_t>(v), 1);
        }
    }
    return net.max_flow(2 * static_cast<std::size_t>(s) + 1,
                        2 * static_cast<std::size_t>(t), limit);
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::invalid_argument(std::string("invalid ") + what + ": '" +
                                    std::string(text) + "'");
    }
    return value;
}

}  // namespace

Predicate Predicate::strong() { return {Kind::strong, 0, 1, 1.0}; }

Predicate Predicate::broadcast(NodeId source) { return {Kind::broadcast, source, 1, 1.0}; }

Predicate Predicate::k_edge(std::int32_t k) {
    if (k < 1) throw std::invalid_argument("k-edge connectivity requires k >= 1");
    return {Kind::k_edge, 0, k, 1.0};
}

Predicate Predicate::k_vertex(std::int32_t k) {
    if (k < 1) throw std::invalid_argument("k-vertex connectivity requires k >= 1");
    return {Kind::k_vertex, 0, k, 1.0};
}

Predicate Predicate::spanner(double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("spanner stretch requires t >= 1");
    return {Kind::spanner, 0, 1, t};
}

Predicate Predicate::parse(std::string_view text) {
    if (text == "strong") return strong();
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "broadcast") return broadcast(parse_number<NodeId>(arg, "source id"));
    if (head == "kedge") return k_edge(parse_number<std::int32_t>(arg, "k"));
    if (head == "kvertex") return k_vertex(parse_number<std::int32_t>(arg, "k"));
    if (head == "spanner") {
        // from_chars(double) exists, but keep locale-free strtod for spelling
        // like "2" and "1.5" uniformly.
        const std::string s(arg);
        char* end = nullptr;
        const double t = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty() || !std::isfinite(t)) {
            throw std::invalid_argument("invalid stretch: '" + s + "'");
        }
        return spanner(t);
    }
    throw std::invalid_argument("unknown predicate: '" + std::string(text) + "'");
}

std::string Predicate::to_string() const {
    switch (kind) {
        case Kind::strong:
            return "strong";
        case Kind::broadcast:
            return "broadcast:" + std::to_string(source);
        case Kind::k_edge:
            return "kedge:" + std::to_string(k);
        case Kind::k_vertex:
            return "kvertex:" + std::to_string(k);
        case Kind::spanner: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", stretch);
            return std::string("spanner:") + buf;
        }
    }
    return "?";
}

bool check_strong(const CommGraph& g) {
    if (g.node_count() <= 1) return true;
    if (reachable_count(g, 0) != g.node_count()) return false;
    return reachable_count(g.transpose(), 0) == g.node_count();
}

bool check_broadcast(const CommGraph& g, NodeId s) {
    return reachable_count(g, s) == g.node_count();
}

bool check_k_edge(const CommGraph& g, std::int32_t k) {
    if (k < 1) throw std::invalid_argument("k-edge connectivity requires k >= 1");
    const std::size_t n = g.node_count();
    if (n == 1) return true;  // no ordered pairs to disconnect
    // Global directed edge connectivity = min over v of the two max-flows
    // against a fixed root.
    for (NodeId v = 1; v < n; ++v) {
        if (flow_between(g, 0, v, k) < k) return false;
        if (flow_between(g, v, 0, k) < k) return false;
    }
    return true;
}

bool check_k_vertex(const CommGraph& g, std::int32_t k) {
    if (k < 1) throw std::invalid_argument("k-vertex connectivity requires k >= 1");
    const std::size_t n = g.node_count();
    if (n <= static_cast<std::size_t>(k)) return false;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u == v || g.has_edge(u, v)) continue;
            if (vertex_flow_between(g, u, v, k) < k) return false;
        }
    }
    return true;
}

bool check_spanner(const CommGraph& g, const Instance& inst, double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("spanner stretch requires t >= 1");
    const std::size_t n = g.node_count();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n);
    using HeapItem = std::pair<double, NodeId>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[s] = 0.0;
        heap.push({0.0, s});
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[u]) continue;
            for (const NodeId v : g.out(u)) {
                const double nd = d + distance(inst.point(u), inst.point(v));
                if (nd < dist[v]) {
                    dist[v] = nd;
                    heap.push({nd, v});
                }
            }
        }
        for (NodeId v = 0; v < n; ++v) {
            if (v == s) continue;
            if (dist[v] > t * distance(inst.point(s), inst.point(v))) return false;
        }
    }
    return true;
}

bool check(const CommGraph& g, const Instance& inst, const Predicate& p) {
    switch (p.kind) {
        case Predicate::Kind::strong:
            return check_strong(g);
        case Predicate::Kind::broadcast:
            if (p.source >= inst.size()) {
                throw std::invalid_argument("broadcast source out of range");
            }
            return check_broadcast(g, p.source);
        case Predicate::Kind::k_edge:
            return check_k_edge(g, p.k);
        case Predicate::Kind::k_vertex:
            return check_k_vertex(g, p.k);
        case Predicate::Kind::spanner:
            return check_spanner(g, inst, p.stretch);
    }
    throw std::logic_error("unhandled predicate kind");
}

}  // namespace topo
