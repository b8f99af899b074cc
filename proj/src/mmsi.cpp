#include "topo/algorithms.hpp"

#include <string>
#include <utility>

#include "topo/comm_graph.hpp"
#include "topo/neighbor_table.hpp"

namespace topo {

namespace {

[[noreturn]] void report_infeasible(const Instance& inst, const Predicate& p,
                                    const CommGraph& saturated) {
    throw InfeasibleError("predicate '" + p.to_string() + "' is infeasible: fails with " +
                          "every node at full power (n=" + std::to_string(inst.size()) +
                          ", level " + std::to_string(inst.size() - 1) + ", " +
                          std::to_string(saturated.edge_count()) + " edges)");
}

}  // namespace

MmsiResult mmsi(const Instance& inst, const Predicate& p) {
    const std::size_t n = inst.size();
    if (n == 1) {
        RangeAssignment rho = RangeAssignment::zeros(1);
        const CommGraph g = build_graph(inst, rho);
        if (!check(g, inst, p)) report_infeasible(inst, p, g);
        return {std::move(rho), 0};
    }

    const SortedNeighborTable table = SortedNeighborTable::build(inst);
    struct Probe {
        bool ok;
        RangeAssignment rho;
        CommGraph g;
    };
    auto probe = [&](std::int32_t k) -> Probe {
        RangeAssignment rho = level_assignment(table, k);
        CommGraph g = build_graph(inst, rho);
        const bool ok = check(g, inst, p);
        return {ok, std::move(rho), std::move(g)};
    };

    const auto max_level = static_cast<std::int32_t>(n - 1);

    // The bisection invariant (fails at lo, holds at hi) needs both ends
    // established up front: full power might be infeasible and level 0 might
    // already suffice.
    auto [ok_top, rho_top, g_top] = probe(max_level);
    if (!ok_top) report_infeasible(inst, p, g_top);
    if (auto [ok_zero, rho_zero, g_zero] = probe(0); ok_zero) {
        return {std::move(rho_zero), 0};
    }

    std::int32_t lo = 0;
    std::int32_t hi = max_level;
    RangeAssignment best = std::move(rho_top);
    while (lo != hi - 1) {
        const std::int32_t mid = (lo + hi) / 2;
        auto [ok, rho, g] = probe(mid);
        if (ok) {
            hi = mid;
            best = std::move(rho);
        } else {
            lo = mid;
        }
    }
    return {std::move(best), hi};
}

}  // namespace topo
