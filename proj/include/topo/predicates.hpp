#pragma once

#include <string>
#include <string_view>

#include "topo/comm_graph.hpp"
#include "topo/instance.hpp"

namespace topo {

/// A monotone connectivity requirement on the communication graph: adding
/// edges never breaks a satisfied predicate, which is what makes the
/// level-wise binary search sound.
struct Predicate {
    enum class Kind { strong, broadcast, k_edge, k_vertex, spanner };

    Kind kind = Kind::strong;
    NodeId source = 0;     // broadcast
    std::int32_t k = 1;    // k_edge / k_vertex
    double stretch = 1.0;  // spanner

    static Predicate strong();
    static Predicate broadcast(NodeId source);
    static Predicate k_edge(std::int32_t k);    // k >= 1
    static Predicate k_vertex(std::int32_t k);  // k >= 1
    static Predicate spanner(double t);         // t >= 1

    /// CLI spelling: strong | broadcast:<id> | kedge:<k> | kvertex:<k> |
    /// spanner:<t>. Throws std::invalid_argument on anything else.
    static Predicate parse(std::string_view text);
    std::string to_string() const;
};

/// Dispatch to the checker for p. The instance provides geometry for the
/// spanner predicate and gives broadcast sources a range check.
bool check(const CommGraph& g, const Instance& inst, const Predicate& p);

/// One strongly connected component covering the whole graph.
bool check_strong(const CommGraph& g);

/// Every node reachable from s by directed paths.
bool check_broadcast(const CommGraph& g, NodeId s);

/// Every ordered pair joined by >= k edge-disjoint directed paths. Computed
/// as unit-capacity max-flows against a fixed root (both directions), which
/// equals the global directed edge connectivity.
bool check_k_edge(const CommGraph& g, std::int32_t k);

/// n > k and every non-adjacent ordered pair joined by >= k internally
/// vertex-disjoint directed paths (vertex-split max-flow).
bool check_k_vertex(const CommGraph& g, std::int32_t k);

/// Every ordered pair's shortest directed path (edges weighted by Euclidean
/// length) is at most t times the pair's straight-line distance.
/// Disconnected pairs fail every finite t.
bool check_spanner(const CommGraph& g, const Instance& inst, double t);

}  // namespace topo
