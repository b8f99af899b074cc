#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "topo/instance.hpp"

namespace topo {

enum class ExperimentAlgo { heuristic, mst_baseline };

std::string_view algo_name(ExperimentAlgo a);
ExperimentAlgo algo_from_name(std::string_view name);  // throws on unknown

/// Simulation-study configuration: for each size, `trials` random instances
/// on a grid x grid square, each solved by every selected algorithm. The
/// instance for trial t uses seed `seed + t`, so runs are reproducible and
/// algorithms are compared on identical instances.
struct ExperimentConfig {
    std::vector<std::size_t> sizes;
    std::int32_t trials = 100;
    double grid = 1000.0;
    std::uint64_t seed = 1;
    std::vector<ExperimentAlgo> algorithms = {ExperimentAlgo::heuristic,
                                              ExperimentAlgo::mst_baseline};
};

/// Aggregate over the trials of one (size, algorithm) cell.
/// mean_avg_per_node averages total/n across trials and std_dev is the
/// sample standard deviation of those per-node averages.
struct ExperimentRow {
    std::size_t n = 0;
    ExperimentAlgo algorithm = ExperimentAlgo::heuristic;
    std::int32_t trials = 0;
    double mean_total = 0.0;
    double mean_avg_per_node = 0.0;
    double std_dev = 0.0;
};

/// One solved trial, for plot-data output.
struct TrialRecord {
    std::size_t n = 0;
    ExperimentAlgo algorithm = ExperimentAlgo::heuristic;
    std::int32_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t total = 0;
    double avg_per_node = 0.0;
};

/// Runs the study. Totals are recomputed from the returned assignments via
/// interference(), never trusted from algorithm bookkeeping. Rows and raw
/// records come back in (size, algorithm, trial) order.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          std::vector<TrialRecord>* raw = nullptr);

// CSV emission, gnuplot-friendly: '#' comment lines record the seed
// schedule, then one header row, then data with fixed 6-decimal reals.
void write_summary_csv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<ExperimentRow>& rows);
void write_raw_csv(std::ostream& out, const ExperimentConfig& config,
                   const std::vector<TrialRecord>& records);

}  // namespace topo
