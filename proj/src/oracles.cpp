#include "topo/oracles.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "topo/comm_graph.hpp"
#include "topo/neighbor_table.hpp"

namespace topo {

MmsiResult mmsi_linear_scan(const Instance& inst, const Predicate& p, std::size_t cap) {
    const std::size_t n = inst.size();
    if (n > cap) {
        throw std::invalid_argument("linear-scan oracle capped at n <= " +
                                    std::to_string(cap));
    }
    if (n == 1) {
        RangeAssignment rho = RangeAssignment::zeros(1);
        if (check(build_graph(inst, rho), inst, p)) return {std::move(rho), 0};
        throw InfeasibleError("predicate '" + p.to_string() + "' is infeasible (n=1)");
    }
    const SortedNeighborTable table = SortedNeighborTable::build(inst);
    for (std::int32_t k = 0; k < static_cast<std::int32_t>(n); ++k) {
        RangeAssignment rho = level_assignment(table, k);
        if (check(build_graph(inst, rho), inst, p)) return {std::move(rho), k};
    }
    throw InfeasibleError("predicate '" + p.to_string() +
                          "' is infeasible: fails at every level up to n-1");
}

TotalResult exhaustive_min_total(const Instance& inst, const Predicate& p) {
    const std::size_t n = inst.size();
    if (n > 5) {
        throw std::invalid_argument("exhaustive oracle capped at n <= 5, got n=" +
                                    std::to_string(n));
    }
    if (n == 1) {
        RangeAssignment rho = RangeAssignment::zeros(1);
        if (check(build_graph(inst, rho), inst, p)) return {std::move(rho), 0};
        throw InfeasibleError("predicate '" + p.to_string() + "' is infeasible (n=1)");
    }

    const SortedNeighborTable table = SortedNeighborTable::build(inst);
    // choice c for node i: 0 -> radius 0, otherwise row_dists(i)[c-1]
    std::vector<std::size_t> choice(n, 0);
    std::vector<double> radii(n, 0.0);

    bool found = false;
    std::int64_t best_total = 0;
    RangeAssignment best;

    for (;;) {
        RangeAssignment rho{radii};
        if (check(build_graph(inst, rho), inst, p)) {
            const std::int64_t total = interference(inst, rho).total_sender;
            if (!found || total < best_total) {
                found = true;
                best_total = total;
                best = std::move(rho);
            }
        }
        // odometer, last node fastest
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (choice[i] + 1 < n) {
                ++choice[i];
                radii[i] = table.row_dists(static_cast<NodeId>(i))[choice[i] - 1];
                break;
            }
            choice[i] = 0;
            radii[i] = 0.0;
            if (i == 0) {
                if (!found) {
                    throw InfeasibleError("predicate '" + p.to_string() +
                                          "' is infeasible for every candidate assignment");
                }
                return {std::move(best), best_total};
            }
        }
    }
}

}  // namespace topo
