// Acceptance suite: end-to-end checks of the optimality, conservation, and
// reproduction properties the library promises, each printed as one
// PASS/FAIL line. Exits with the number of failed checks.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/reference_impls.hpp"
#include "topo/algorithms.hpp"
#include "topo/comm_graph.hpp"
#include "topo/experiment.hpp"
#include "topo/neighbor_table.hpp"
#include "topo/oracles.hpp"
#include "topo/predicates.hpp"

namespace {

using topo::CommGraph;
using topo::Instance;
using topo::NodeId;
using topo::Predicate;
using topo::RangeAssignment;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

std::vector<Predicate> mmsi_predicates() {
    return {Predicate::strong(), Predicate::broadcast(0), Predicate::k_edge(2),
            Predicate::k_vertex(2), Predicate::spanner(2.0)};
}

// 1. The bisection finds exactly the level the linear scan finds, and both
//    agree on infeasibility, across sizes 2..12 and all five predicates.
Outcome mmsi_optimality() {
    const auto start = std::chrono::steady_clock::now();
    int feasible = 0;
    int infeasible = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 11);
        const Instance inst = topo::generate_instance(n, 1000.0, 1000 + i);
        for (const Predicate& p : mmsi_predicates()) {
            std::int32_t fast = -1;
            std::int32_t slow = -1;
            try {
                fast = topo::mmsi(inst, p).level;
            } catch (const topo::InfeasibleError&) {
            }
            try {
                slow = topo::mmsi_linear_scan(inst, p).level;
            } catch (const topo::InfeasibleError&) {
            }
            if (fast != slow) {
                return {false, fmt("mismatch at seed %d n=%zu predicate %s: %d vs %d",
                                   1000 + i, n, p.to_string().c_str(), fast, slow)};
            }
            (fast < 0 ? infeasible : feasible)++;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) return {false, fmt("agreed but took %.1fs (budget 30s)", secs)};
    return {true, fmt("1000 runs agree (%d feasible, %d infeasible)", feasible, infeasible)};
}

// 2. Total sender interference == total receiver interference == edge count,
//    on every random (instance, assignment) pair.
Outcome conservation() {
    std::mt19937_64 rng(0xC2);
    for (int round = 0; round < 1000; ++round) {
        const std::size_t n = 1 + rng() % 50;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const RangeAssignment rho = round % 2 == 0
                                        ? refimpl::random_assignment(rng, n, 1400.0)
                                        : refimpl::candidate_assignment(rng, inst);
        const auto rep = interference(inst, rho);
        const auto edges = static_cast<std::int64_t>(build_graph(inst, rho).edge_count());
        if (rep.total_sender != edges || rep.total_receiver != edges) {
            return {false, fmt("violated at round %d (n=%zu): sender %lld receiver %lld "
                               "edges %lld",
                               round, n, static_cast<long long>(rep.total_sender),
                               static_cast<long long>(rep.total_receiver),
                               static_cast<long long>(edges))};
        }
    }
    return {true, "1000 (instance, assignment) pairs, totals equal |E| every time"};
}

// 3. The broadcast assignment always totals exactly n-1 with a verified
//    broadcast graph, and the exhaustive search confirms n-1 is optimal.
Outcome broadcast_optimum() {
    std::mt19937_64 rng(0xC3);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 200;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const auto s = static_cast<NodeId>(rng() % n);
        const auto result = topo::mtsi_broadcast(inst, s);
        if (result.total != static_cast<std::int64_t>(n) - 1) {
            return {false, fmt("total %lld != n-1 at round %d (n=%zu)",
                               static_cast<long long>(result.total), round, n)};
        }
        if (!topo::check_broadcast(build_graph(inst, result.rho), s)) {
            return {false, fmt("broadcast check failed at round %d (n=%zu)", round, n)};
        }
    }
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 4;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const auto optimum = topo::exhaustive_min_total(inst, Predicate::broadcast(0));
        if (optimum.total != static_cast<std::int64_t>(n) - 1) {
            return {false, fmt("exhaustive broadcast optimum %lld != n-1 (n=%zu)",
                               static_cast<long long>(optimum.total), n)};
        }
    }
    return {true, "500 assignments at exactly n-1, 50 exhaustive confirmations"};
}

// 4. The greedy output graph is strongly connected, always.
Outcome heuristic_soundness() {
    std::mt19937_64 rng(0xC4);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 2 + rng() % 199;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const auto result = topo::heuristic_strong_total(inst);
        if (!topo::check_strong(build_graph(inst, result.rho))) {
            return {false, fmt("not strongly connected at round %d (n=%zu)", round, n)};
        }
    }
    return {true, "500 outputs strongly connected, 100%"};
}

// 5. Against the exhaustive optimum at n=5 (instance seeds 5001..5100): the
//    greedy never wins, and stays within 1.5x on at least 90%.
Outcome heuristic_quality() {
    int within_band = 0;
    for (int i = 0; i < 100; ++i) {
        const Instance inst = topo::generate_instance(5, 1000.0, 5001 + i);
        const std::int64_t heuristic = topo::heuristic_strong_total(inst).total;
        const std::int64_t optimum =
            topo::exhaustive_min_total(inst, Predicate::strong()).total;
        if (heuristic < optimum) {
            return {false, fmt("heuristic %lld beat the exhaustive optimum %lld (seed %d)",
                               static_cast<long long>(heuristic),
                               static_cast<long long>(optimum), 5001 + i)};
        }
        if (static_cast<double>(heuristic) <= 1.5 * static_cast<double>(optimum)) {
            ++within_band;
        }
    }
    if (within_band < 90) {
        return {false, fmt("only %d/100 within 1.5x of optimum", within_band)};
    }
    return {true, fmt("never below optimum; %d/100 within 1.5x (seeds 5001-5100)",
                      within_band)};
}

// 6. Simulation study: mean per-node interference of the greedy stays inside
//    [2.0, 2.4] for sizes 10, 100, 500 at 100 trials each.
Outcome simulation_band() {
    topo::ExperimentConfig config;
    config.sizes = {10, 100, 500};
    config.trials = 100;
    config.grid = 1000.0;
    config.seed = 20250808;
    config.algorithms = {topo::ExperimentAlgo::heuristic};

    const auto rows = topo::run_experiment(config);
    std::string detail;
    for (const auto& row : rows) {
        detail += fmt("n=%zu avg=%.3f ", row.n, row.mean_avg_per_node);
        if (row.mean_avg_per_node < 2.0 || row.mean_avg_per_node > 2.4) {
            return {false, detail + "-- outside [2.0, 2.4]"};
        }
    }
    return {true, detail + "(band [2.0, 2.4], 100 trials each)"};
}

// 7. The cached greedy selection picks the same triple as the naive
//    O(n^3)-per-iteration scan at every single step.
Outcome selection_decomposition() {
    std::mt19937_64 rng(0xC7);
    int steps = 0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + rng() % 29;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        topo::GreedyTrace trace;
        topo::heuristic_strong_total(inst, &trace);
        const auto naive = refimpl::naive_greedy(inst);
        if (trace.steps.size() != naive.steps.size()) {
            return {false, fmt("step count mismatch at round %d", round)};
        }
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& a = trace.steps[i];
            const auto& b = naive.steps[i];
            if (a.grow != b.grow || a.anchor != b.anchor || a.joined != b.joined ||
                a.cost != b.cost) {
                return {false,
                        fmt("triple mismatch at round %d step %zu: "
                            "(%u,%u,%u,%lld) vs (%u,%u,%u,%lld)",
                            round, i, a.grow, a.anchor, a.joined,
                            static_cast<long long>(a.cost), b.grow, b.anchor, b.joined,
                            static_cast<long long>(b.cost))};
            }
            ++steps;
        }
    }
    return {true, fmt("100 instances, %d greedy steps identical to the naive scan", steps)};
}

// 8. No checker ever flips from satisfied to unsatisfied when edges are
//    added, and the k=1 / broadcast / huge-stretch identities hold.
Outcome monotonicity_suite() {
    std::mt19937_64 rng(0xC8);
    std::uniform_real_distribution<double> bump(0.0, 300.0);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 4 + rng() % 9;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const RangeAssignment small = refimpl::random_assignment(rng, n, 600.0);
        std::vector<double> bigger = small.values();
        for (double& r : bigger) r += bump(rng);
        const CommGraph g1 = build_graph(inst, small);
        const CommGraph g2 = build_graph(inst, RangeAssignment{std::move(bigger)});
        const Predicate predicates[] = {Predicate::strong(),
                                        Predicate::broadcast(static_cast<NodeId>(rng() % n)),
                                        Predicate::k_edge(2), Predicate::k_vertex(2),
                                        Predicate::spanner(1.5)};
        for (const Predicate& p : predicates) {
            if (topo::check(g1, inst, p) && !topo::check(g2, inst, p)) {
                return {false, fmt("monotonicity violated at round %d by %s", round,
                                   p.to_string().c_str())};
            }
        }
    }
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 2 + rng() % 9;
        const Instance inst = topo::generate_instance(n, 1000.0, rng());
        const CommGraph g =
            build_graph(inst, refimpl::random_assignment(rng, n, 400.0 + double(rng() % 800)));
        const bool strong = topo::check_strong(g);
        if (strong != topo::check_k_edge(g, 1) || strong != topo::check_k_vertex(g, 1) ||
            strong != topo::check_spanner(g, inst, 1e15)) {
            return {false, fmt("k=1 identity violated at round %d", round)};
        }
        if (strong) {
            for (NodeId s = 0; s < n; ++s) {
                if (!topo::check_broadcast(g, s)) {
                    return {false, fmt("broadcast-from-strong violated at round %d", round)};
                }
            }
        }
    }
    return {true, "200 edge-growth pairs x 5 checkers, 200 identity graphs"};
}

// 9. Single-threaded wall-clock bounds at the sizes the harness targets.
Outcome scaling_smoke() {
    const auto t0 = std::chrono::steady_clock::now();
    const Instance big = topo::generate_instance(1000, 1000.0, 424242);
    const auto greedy = topo::heuristic_strong_total(big);
    const double greedy_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!topo::check_strong(build_graph(big, greedy.rho))) {
        return {false, "n=1000 greedy output not strongly connected"};
    }

    const auto t1 = std::chrono::steady_clock::now();
    const Instance mid = topo::generate_instance(300, 1000.0, 434343);
    topo::mmsi(mid, Predicate::strong());
    const double mmsi_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

    if (greedy_secs >= 120.0 || mmsi_secs >= 30.0) {
        return {false, fmt("heuristic n=1000: %.1fs (budget 120s), mmsi n=300: %.1fs "
                           "(budget 30s)",
                           greedy_secs, mmsi_secs)};
    }
    return {true, fmt("heuristic n=1000: %.2fs < 120s, mmsi strong n=300: %.2fs < 30s",
                      greedy_secs, mmsi_secs)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"mmsi-optimality", mmsi_optimality},
        {"interference-conservation", conservation},
        {"broadcast-optimum", broadcast_optimum},
        {"heuristic-soundness", heuristic_soundness},
        {"heuristic-quality-band", heuristic_quality},
        {"simulation-reproduction-band", simulation_band},
        {"selection-decomposition-exactness", selection_decomposition},
        {"predicate-monotonicity", monotonicity_suite},
        {"scaling-smoke", scaling_smoke},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu acceptance checks passed\n", criteria.size());
    } else {
        std::printf("%d acceptance check(s) FAILED\n", failures);
    }
    return failures;
}
