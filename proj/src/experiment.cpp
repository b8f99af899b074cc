#include "topo/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "topo/algorithms.hpp"

namespace topo {

std::string_view algo_name(ExperimentAlgo a) {
    switch (a) {
        case ExperimentAlgo::heuristic:
            return "heuristic";
        case ExperimentAlgo::mst_baseline:
            return "mst_baseline";
    }
    return "?";
}

ExperimentAlgo algo_from_name(std::string_view name) {
    if (name == "heuristic") return ExperimentAlgo::heuristic;
    if (name == "mst_baseline") return ExperimentAlgo::mst_baseline;
    throw std::invalid_argument("unknown algorithm: '" + std::string(name) +
                                "' (expected heuristic or mst_baseline)");
}

namespace {

void validate(const ExperimentConfig& config) {
    if (config.sizes.empty()) throw std::invalid_argument("experiment needs at least one size");
    if (config.trials < 1) throw std::invalid_argument("experiment needs at least one trial");
    if (!(config.grid > 0.0)) throw std::invalid_argument("grid side must be positive");
    if (config.algorithms.empty()) {
        throw std::invalid_argument("experiment needs at least one algorithm");
    }
    for (const std::size_t n : config.sizes) {
        if (n < 1) throw std::invalid_argument("experiment sizes must be at least 1");
    }
}

std::int64_t solve_total(ExperimentAlgo algo, const Instance& inst) {
    switch (algo) {
        case ExperimentAlgo::heuristic:
            return heuristic_strong_total(inst).total;
        case ExperimentAlgo::mst_baseline:
            return mst_baseline(inst).total;
    }
    throw std::logic_error("unhandled algorithm");
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          std::vector<TrialRecord>* raw) {
    validate(config);
    if (raw) raw->clear();

    std::vector<ExperimentRow> rows;
    for (const std::size_t n : config.sizes) {
        // one instance per trial, shared by every algorithm
        std::vector<std::vector<TrialRecord>> per_algo(config.algorithms.size());
        for (std::int32_t trial = 0; trial < config.trials; ++trial) {
            const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
            const Instance inst = generate_instance(n, config.grid, seed);
            for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
                const std::int64_t total = solve_total(config.algorithms[a], inst);
                per_algo[a].push_back({n, config.algorithms[a], trial, seed, total,
                                       static_cast<double>(total) / static_cast<double>(n)});
            }
        }
        for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
            double total_sum = 0.0;
            double avg_sum = 0.0;
            for (const TrialRecord& r : per_algo[a]) {
                total_sum += static_cast<double>(r.total);
                avg_sum += r.avg_per_node;
            }
            const auto trials = static_cast<double>(config.trials);
            const double avg_mean = avg_sum / trials;
            double var = 0.0;
            if (config.trials > 1) {
                for (const TrialRecord& r : per_algo[a]) {
                    const double d = r.avg_per_node - avg_mean;
                    var += d * d;
                }
                var /= trials - 1.0;
            }
            rows.push_back({n, config.algorithms[a], config.trials, total_sum / trials,
                            avg_mean, std::sqrt(var)});
            if (raw) raw->insert(raw->end(), per_algo[a].begin(), per_algo[a].end());
        }
    }
    return rows;
}

void write_summary_csv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<ExperimentRow>& rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "# grid=%g trials=%d base_seed=%llu", config.grid,
                  config.trials, static_cast<unsigned long long>(config.seed));
    out << "# topomin experiment summary\n"
        << buf << "\n"
        << "# per-trial instance seed = base_seed + trial index\n"
        << "n,algorithm,trials,mean_total,mean_avg_per_node,std_dev\n";
    for (const ExperimentRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%zu,%s,%d,%.6f,%.6f,%.6f", r.n,
                      std::string(algo_name(r.algorithm)).c_str(), r.trials, r.mean_total,
                      r.mean_avg_per_node, r.std_dev);
        out << buf << "\n";
    }
}

void write_raw_csv(std::ostream& out, const ExperimentConfig& config,
                   const std::vector<TrialRecord>& records) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "# grid=%g base_seed=%llu", config.grid,
                  static_cast<unsigned long long>(config.seed));
    out << "# topomin experiment raw trials\n"
        << buf << "\n"
        << "n,algorithm,trial,seed,total,avg_per_node\n";
    for (const TrialRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%zu,%s,%d,%llu,%lld,%.6f", r.n,
                      std::string(algo_name(r.algorithm)).c_str(), r.trial,
                      static_cast<unsigned long long>(r.seed),
                      static_cast<long long>(r.total), r.avg_per_node);
        out << buf << "\n";
    }
}

}  // namespace topo
