// topomin -- range assignment for 2D sensor networks under connectivity
// predicates, minimizing maximum or total sender interference.
//
// Subcommands:
//   gen         write a random instance file
//   solve       run an optimizer on an instance (mmsi | broadcast | strong)
//   experiment  multi-trial simulation study, CSV output
//   oracle      brute-force references for spot checks
//
// Exit codes: 0 success, 2 usage error, 3 infeasible predicate, 4 I/O error.

#include <cinttypes>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "topo/algorithms.hpp"
#include "topo/comm_graph.hpp"
#include "topo/experiment.hpp"
#include "topo/instance_io.hpp"
#include "topo/kernels.hpp"
#include "topo/oracles.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

using json = nlohmann::ordered_json;

[[noreturn]] void die_usage(const std::string& message) {
    std::cerr << "topomin: " << message << "\n";
    std::exit(kExitUsage);
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write: " + out_path);
    out << report.dump(2) << "\n";
}

void dump_graph(const topo::CommGraph& g, const std::string& path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot write: " + path);
        out = &file;
    }
    for (topo::NodeId u = 0; u < g.node_count(); ++u) {
        for (const topo::NodeId v : g.out(u)) *out << u << " " << v << "\n";
    }
}

json base_report(const topo::Instance& inst, const topo::RangeAssignment& rho) {
    const topo::InterferenceReport rep = topo::interference(inst, rho);
    json j;
    j["n"] = inst.size();
    j["radii"] = rho.values();
    j["sender_interference"] = rep.sender;
    j["max_sender_interference"] = rep.max_sender;
    j["total_sender_interference"] = rep.total_sender;
    return j;
}

struct GenArgs {
    std::size_t nodes = 0;
    double grid = 1000.0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& args) {
    const topo::Instance inst = topo::generate_instance(args.nodes, args.grid, args.seed);
    topo::save_instance(args.out, inst);
    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016" PRIx64, topo::position_checksum(inst));
    std::cout << "wrote " << args.out << " (" << inst.size() << " nodes, grid " << args.grid
              << ", seed " << args.seed << ", checksum " << checksum << ")\n";
    return 0;
}

struct SolveArgs {
    std::string instance_path;
    std::string objective;
    std::string predicate;
    std::int64_t source = -1;
    std::string out;
    std::string dump_graph_path;
};

int run_solve(const SolveArgs& args) {
    const topo::Instance inst = topo::load_instance(args.instance_path);
    json report;
    report["objective"] = args.objective;
    report["instance"] = args.instance_path;

    topo::RangeAssignment rho;
    topo::Predicate verify = topo::Predicate::strong();

    if (args.objective == "mmsi") {
        if (args.predicate.empty()) die_usage("solve mmsi requires --predicate");
        const topo::Predicate p = topo::Predicate::parse(args.predicate);
        const topo::MmsiResult result = topo::mmsi(inst, p);
        rho = result.rho;
        verify = p;
        report["predicate"] = p.to_string();
        report["level"] = result.level;
        report["objective_value"] = result.level;
    } else if (args.objective == "broadcast") {
        std::optional<topo::NodeId> source = inst.source();
        if (args.source >= 0) source = static_cast<topo::NodeId>(args.source);
        if (!source) die_usage("solve broadcast requires --source (or a source in the file)");
        if (*source >= inst.size()) die_usage("source id out of range");
        const topo::TotalResult result = topo::mtsi_broadcast(inst, *source);
        rho = result.rho;
        verify = topo::Predicate::broadcast(*source);
        report["predicate"] = verify.to_string();
        report["total_interference"] = result.total;
        report["objective_value"] = result.total;
    } else {  // strong
        topo::GreedyTrace trace;
        const topo::TotalResult result = topo::heuristic_strong_total(inst, &trace);
        rho = result.rho;
        verify = topo::Predicate::strong();
        report["predicate"] = "strong";
        report["total_interference"] = result.total;
        report["greedy_running_total"] = trace.running_total;
        report["objective_value"] = result.total;
    }

    const topo::CommGraph graph = topo::build_graph(inst, rho);
    report.update(base_report(inst, rho));
    report["verified"] = topo::check(graph, inst, verify);
    report["kernels"] = topo::kernels::active().name;
    if (!args.dump_graph_path.empty()) dump_graph(graph, args.dump_graph_path);
    emit(report, args.out);
    return 0;
}

struct ExperimentArgs {
    std::vector<std::size_t> sizes;
    std::int32_t trials = 100;
    double grid = 1000.0;
    std::uint64_t seed = 1;
    std::vector<std::string> algorithms = {"heuristic", "mst_baseline"};
    std::string out;
    std::string raw;
};

int run_experiment_cmd(const ExperimentArgs& args) {
    topo::ExperimentConfig config;
    config.sizes = args.sizes;
    config.trials = args.trials;
    config.grid = args.grid;
    config.seed = args.seed;
    config.algorithms.clear();
    for (const std::string& name : args.algorithms) {
        config.algorithms.push_back(topo::algo_from_name(name));
    }

    std::vector<topo::TrialRecord> raw_records;
    const std::vector<topo::ExperimentRow> rows =
        topo::run_experiment(config, args.raw.empty() ? nullptr : &raw_records);

    if (args.out.empty()) {
        topo::write_summary_csv(std::cout, config, rows);
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot write: " + args.out);
        topo::write_summary_csv(out, config, rows);
    }
    if (!args.raw.empty()) {
        std::ofstream raw_out(args.raw);
        if (!raw_out) throw std::runtime_error("cannot write: " + args.raw);
        topo::write_raw_csv(raw_out, config, raw_records);
    }
    return 0;
}

struct OracleArgs {
    std::string instance_path;
    std::string kind;
    std::string predicate;
    std::size_t cap = 64;
};

int run_oracle(const OracleArgs& args) {
    const topo::Instance inst = topo::load_instance(args.instance_path);
    if (args.predicate.empty()) die_usage("oracle requires --predicate");
    const topo::Predicate p = topo::Predicate::parse(args.predicate);

    json report;
    report["instance"] = args.instance_path;
    report["predicate"] = p.to_string();
    if (args.kind == "mmsi") {
        const topo::MmsiResult result = topo::mmsi_linear_scan(inst, p, args.cap);
        report["oracle"] = "mmsi_linear_scan";
        report["level"] = result.level;
        report.update(base_report(inst, result.rho));
    } else {
        const topo::TotalResult result = topo::exhaustive_min_total(inst, p);
        report["oracle"] = "exhaustive_min_total";
        report["total_interference"] = result.total;
        report.update(base_report(inst, result.rho));
    }
    emit(report, "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topology control: interference-minimizing range assignment"};
    app.require_subcommand(1);

    std::string kernels_name;
    app.add_option("--kernels", kernels_name, "force a kernel implementation (scalar, avx2)");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("-n,--nodes", gen_args.nodes, "node count")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("-g,--grid", gen_args.grid, "square side length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("-s,--seed", gen_args.seed, "RNG seed")->capture_default_str();
    gen->add_option("-o,--out", gen_args.out, "output path")->required();

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "run an optimizer on an instance");
    solve->add_option("instance", solve_args.instance_path, "instance file")->required();
    solve->add_option("objective", solve_args.objective, "mmsi | broadcast | strong")
        ->required()
        ->check(CLI::IsMember({"mmsi", "broadcast", "strong"}));
    solve->add_option("-p,--predicate", solve_args.predicate,
                      "connectivity predicate (mmsi): strong, broadcast:<id>, kedge:<k>, "
                      "kvertex:<k>, spanner:<t>");
    solve->add_option("-s,--source", solve_args.source,
                      "broadcast source (overrides the file's source)");
    solve->add_option("-o,--out", solve_args.out, "write the JSON report here");
    solve->add_option("--dump-graph", solve_args.dump_graph_path,
                      "write the result graph as 'u v' edge lines ('-' for stdout)");

    ExperimentArgs exp_args;
    CLI::App* experiment = app.add_subcommand("experiment", "multi-trial simulation study");
    experiment->add_option("--sizes", exp_args.sizes, "node counts, comma separated")
        ->required()
        ->delimiter(',');
    experiment->add_option("--trials", exp_args.trials, "trials per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    experiment->add_option("--grid", exp_args.grid, "square side length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    experiment->add_option("--seed", exp_args.seed, "base seed")->capture_default_str();
    experiment->add_option("--algorithms", exp_args.algorithms,
                           "heuristic and/or mst_baseline, comma separated")
        ->delimiter(',');
    experiment->add_option("--out", exp_args.out, "summary CSV path (default stdout)");
    experiment->add_option("--raw", exp_args.raw, "also write per-trial CSV here");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->add_option("instance", oracle_args.instance_path, "instance file")->required();
    oracle->add_option("kind", oracle_args.kind, "mmsi (linear scan) | total (exhaustive)")
        ->required()
        ->check(CLI::IsMember({"mmsi", "total"}));
    oracle->add_option("-p,--predicate", oracle_args.predicate, "connectivity predicate");
    oracle->add_option("--cap", oracle_args.cap, "size cap for the linear scan")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!kernels_name.empty() && !topo::kernels::set_active(kernels_name)) {
        die_usage("kernel implementation '" + kernels_name + "' is not available here");
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (solve->parsed()) return run_solve(solve_args);
        if (experiment->parsed()) return run_experiment_cmd(exp_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
    } catch (const topo::InfeasibleError& e) {
        std::cerr << "topomin: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "topomin: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "topomin: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
