#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "topo/instance.hpp"
#include "topo/predicates.hpp"

namespace topo {

/// The requested predicate cannot hold even with every node at full power.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimized maximum sender interference: the assignment satisfies the
/// predicate, its maximum sender interference equals `level`, and level-1
/// was certified infeasible during the search (when level > 0).
struct MmsiResult {
    RangeAssignment rho;
    std::int32_t level = 0;
};

/// A feasible assignment with its total sender interference, recomputed
/// from scratch rather than taken from any algorithm-internal bookkeeping.
struct TotalResult {
    RangeAssignment rho;
    std::int64_t total = 0;
};

/// One greedy join: tree node `grow` extends its radius to reach `joined`,
/// which in turn sets its radius to reach tree node `anchor`.
struct GreedyStep {
    NodeId grow = 0;
    NodeId anchor = 0;
    NodeId joined = 0;
    std::int64_t cost = 0;
};

/// Per-step log of the greedy heuristic. `running_total` is the sum of the
/// selected step costs; it can differ from the recomputed total because step
/// costs never account for later radius growth at third-party nodes, so the
/// recomputed value is the one reported.
struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::int64_t running_total = 0;
};

/// Minimize the maximum sender interference subject to p: binary search over
/// the uniform interference level, probing each level's assignment with a
/// graph build and a predicate check. Throws InfeasibleError when even the
/// saturated assignment (level n-1) fails p.
MmsiResult mmsi(const Instance& inst, const Predicate& p);

/// Optimal total sender interference for broadcast from s: the source gets
/// exactly the radius of its farthest node, everyone else zero, for a total
/// of n-1 (which matches the lower bound every broadcast graph must pay).
TotalResult mtsi_broadcast(const Instance& inst, NodeId s);

/// Greedy total-interference heuristic for strong connectivity. Grows a
/// strongly connected tree from node 0, at each step choosing the join that
/// minimizes the incremental sender-interference cost; ranges never shrink.
/// Deterministic: ties prefer the smallest joined id, then the smallest
/// growing id, then the smallest anchor id.
TotalResult heuristic_strong_total(const Instance& inst, GreedyTrace* trace = nullptr);

/// Comparison baseline: assign every node the length of its longest incident
/// Euclidean-MST edge, which makes each tree edge bidirectional and the
/// graph strongly connected. Stands in for the literature comparison in the
/// experiment harness; clearly labeled as a baseline in all CLI output.
TotalResult mst_baseline(const Instance& inst);

}  // namespace topo
