// riskpath: fault-tolerant path-finding strategies on DAGs with per-edge
// failure probabilities. Subcommands: accumulate, route, simulate,
// enumerate, poly, paradox, sweep, baseline, gen.
//
// Exit codes: 0 success, 2 input error, 3 resource guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riskpath/generate.hpp"
#include "riskpath/graph_io.hpp"
#include "riskpath/report.hpp"

namespace {

using namespace riskpath;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphArgs {
    std::string path;
    double alpha = -1.0;  // < 0: keep file risks
    bool has_alpha() const { return alpha >= 0.0; }

    Dag load() const {
        Dag dag = parse_graph(read_input(path));
        if (has_alpha()) dag = dag.with_uniform_risk(alpha);
        return dag;
    }
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_alpha = true) {
    cmd->add_option("graph", args.path, "graph file (JSON or DOT), or - for stdin")->required();
    if (with_alpha)
        cmd->add_option("--alpha", args.alpha, "uniform risk overriding every edge risk")
            ->check(CLI::Range(0.0, 1.0));
}

Model parse_model(const std::string& name) {
    if (name == "eagle") return Model::eagle;
    if (name == "bat") return Model::bat;
    throw CLI::ValidationError("--model", "must be 'eagle' or 'bat'");
}

OrderKey parse_order_key(const std::string& name) {
    if (name == "accumulated") return OrderKey::accumulated;
    if (name == "remainder") return OrderKey::remainder;
    throw CLI::ValidationError("--order-key", "must be 'accumulated' or 'remainder'");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerant path-finding on DAGs with per-edge failure risks"};
    app.require_subcommand(1);

    GraphArgs graph;
    std::string model_name = "bat";
    std::string order_key_name = "accumulated";
    std::string format = "json";
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    int steps = 101;
    int max_edges = 25;
    bool dump_traces = false;
    bool all_edges = false;

    auto* accumulate_cmd = app.add_subcommand("accumulate", "backward risk accumulation report");
    add_graph_options(accumulate_cmd, graph);
    accumulate_cmd->add_option("--model", model_name, "eagle or bat (default bat)");
    accumulate_cmd->add_option("--order-key", order_key_name,
                               "attempt-order sort key: accumulated or remainder");
    accumulate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* route_cmd =
        app.add_subcommand("route", "accumulation plus planned attempt orders and path");
    add_graph_options(route_cmd, graph);
    route_cmd->add_option("--model", model_name);
    route_cmd->add_option("--order-key", order_key_name);
    route_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo greedy-walk trials");
    add_graph_options(simulate_cmd, graph);
    simulate_cmd->add_option("--model", model_name);
    simulate_cmd->add_option("--order-key", order_key_name);
    simulate_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", seed);
    simulate_cmd->add_flag("--dump-traces", dump_traces,
                           "write one walk trace per line (JSON) to stderr");

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "exact failure probability by world enumeration");
    add_graph_options(enumerate_cmd, graph);
    enumerate_cmd->add_option("--model", model_name);
    enumerate_cmd->add_option("--order-key", order_key_name);
    enumerate_cmd->add_option("--max-edges", max_edges, "enumeration guard (default 25)");

    auto* poly_cmd = app.add_subcommand("poly", "uniform-risk polynomials per edge");
    add_graph_options(poly_cmd, graph, /*with_alpha=*/false);
    poly_cmd->add_option("--model", model_name, "bat (default) or eagle (debug)");

    auto* paradox_cmd = app.add_subcommand("paradox", "source first-choice crossovers in (0,1)");
    add_graph_options(paradox_cmd, graph, /*with_alpha=*/false);
    paradox_cmd->add_flag("--all-edges", all_edges,
                          "also report attempt-order changes at every edge");

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of source-choice polynomials");
    add_graph_options(sweep_cmd, graph, /*with_alpha=*/false);
    sweep_cmd->add_option("--steps", steps, "grid points including both ends (default 101)")
        ->check(CLI::Range(2, 1000000));

    auto* baseline_cmd = app.add_subcommand("baseline", "static most-reliable path (no rerouting)");
    add_graph_options(baseline_cmd, graph);

    LayeredOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random layered DAG (JSON to stdout)");
    gen_cmd->add_option("--layers", gen_opt.layers)->check(CLI::Range(2, 1000));
    gen_cmd->add_option("--width", gen_opt.width)->check(CLI::Range(1, 1000));
    gen_cmd->add_option("--edge-prob", gen_opt.edge_prob)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen_opt.seed);
    gen_cmd->add_option("--risk-min", gen_opt.risk_min)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--risk-max", gen_opt.risk_max)->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        Model model = parse_model(model_name);
        OrderKey key = parse_order_key(order_key_name);

        if (*accumulate_cmd) {
            Dag dag = graph.load();
            Accumulation acc = accumulate(dag, model, key);
            if (format == "table")
                std::cout << accumulation_table(dag, acc);
            else
                emit(accumulation_report(dag, acc));
        } else if (*route_cmd) {
            Dag dag = graph.load();
            Accumulation acc = accumulate(dag, model, key);
            if (format == "table")
                std::cout << route_table(dag, acc);
            else
                emit(route_report(dag, acc));
        } else if (*simulate_cmd) {
            Dag dag = graph.load();
            if (dump_traces) {
                Accumulation acc = accumulate(dag, model, key);
                for (std::uint64_t t = 0; t < trials; ++t) {
                    World w = world_for_trial(dag, seed, t);
                    std::cerr << trace_json(dag, greedy_walk(dag, acc, w)).dump() << "\n";
                }
            }
            emit(trial_report(monte_carlo(dag, model, trials, seed, key)));
        } else if (*enumerate_cmd) {
            Dag dag = graph.load();
            Accumulation acc = accumulate(dag, model, key);
            ExactResult exact = enumerate_exact(dag, acc, max_edges);
            emit(enumerate_report(dag, acc, exact));
        } else if (*poly_cmd) {
            Dag dag = graph.load();
            emit(polynomial_report(dag, accumulate_symbolic(dag, model)));
        } else if (*paradox_cmd) {
            Dag dag = graph.load();
            Json j;
            j["crossovers"] = crossover_report(dag, find_crossovers(dag));
            if (all_edges) {
                PiecewiseAccumulation pw = accumulate_symbolic(dag, Model::bat);
                Json bp = Json::array();
                for (double b : pw.breakpoints) bp.push_back(round12(b));
                j["attempt_order_breakpoints"] = std::move(bp);
            }
            emit(j);
        } else if (*sweep_cmd) {
            Dag dag = graph.load();
            std::cout << sweep_csv(dag, sweep(dag, steps));
        } else if (*baseline_cmd) {
            Dag dag = graph.load();
            emit(baseline_report(dag, static_most_reliable_path(dag)));
        } else if (*gen_cmd) {
            std::cout << serialize_graph(generate_layered(gen_opt));
        }
    } catch (const EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
