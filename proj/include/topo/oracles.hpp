#pragma once

#include "topo/algorithms.hpp"

namespace topo {

// Brute-force references used by the test and acceptance suites (and the
// CLI `oracle` subcommand for manual spot checks). Deliberately simple and
// independent of the bisection/greedy code paths; guarded by size caps so a
// misplaced call cannot blow up a test run.

/// Probes interference levels 0, 1, ..., n-1 in order with the same
/// uniform-level assignment family the bisection uses and returns the first
/// feasible level. Throws InfeasibleError when none works and
/// std::invalid_argument when n exceeds `cap`.
MmsiResult mmsi_linear_scan(const Instance& inst, const Predicate& p,
                            std::size_t cap = 64);

/// Exact minimum total sender interference over every candidate-radius
/// tuple satisfying p. Each node's radius ranges over {0} union its distance
/// row; that family is exhaustive because interference counts and edge sets
/// only change at pairwise distances. Requires n <= 5.
TotalResult exhaustive_min_total(const Instance& inst, const Predicate& p);

}  // namespace topo
