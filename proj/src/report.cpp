#include "riskpath/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace riskpath {

namespace {

std::vector<std::string> id_list(const Dag& dag, const std::vector<EdgeIndex>& edges) {
    std::vector<std::string> ids;
    ids.reserve(edges.size());
    for (EdgeIndex e : edges) ids.push_back(dag.edge_id(e));
    return ids;
}

Json coefficient_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return Json(c.convert_to<std::int64_t>());
    return Json(c.str());
}

}  // namespace

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format12(x).c_str(), nullptr);
}

Json accumulation_report(const Dag& dag, const Accumulation& acc) {
    Json j;
    j["model"] = acc.model == Model::eagle ? "eagle" : "bat";
    j["edges"] = Json::array();
    for (int i = 0; i < dag.edge_count(); ++i) {
        const size_t si = static_cast<size_t>(i);
        Json je;
        je["id"] = dag.edge_id(i);
        je["risk"] = round12(acc.risk[si]);
        je["accumulated"] = round12(acc.accumulated[si]);
        if (!acc.remainder.empty()) je["remainder"] = round12(acc.remainder[si]);
        je["attempt_order"] = id_list(dag, acc.attempt_order[si]);
        j["edges"].push_back(std::move(je));
    }
    j["source_risk"] = round12(acc.source_risk);
    return j;
}

std::string accumulation_table(const Dag& dag, const Accumulation& acc) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-14s %8s %12s %10s\n", "edge", "risk", "accumulated",
                  acc.remainder.empty() ? "" : "remainder");
    out << line;
    for (int i = 0; i < dag.edge_count(); ++i) {
        const size_t si = static_cast<size_t>(i);
        if (acc.remainder.empty())
            std::snprintf(line, sizeof(line), "%-14s %8.4f %12.4f\n", dag.edge_id(i).c_str(),
                          acc.risk[si], acc.accumulated[si]);
        else
            std::snprintf(line, sizeof(line), "%-14s %8.4f %12.4f %10.4f\n",
                          dag.edge_id(i).c_str(), acc.risk[si], acc.accumulated[si],
                          acc.remainder[si]);
        out << line;
    }
    std::snprintf(line, sizeof(line), "source risk: %.4f\n", acc.source_risk);
    out << line;
    return out.str();
}

namespace {

std::vector<EdgeIndex> planned_path(const Dag& dag, const Accumulation& acc) {
    // the walk in the all-intact world commits to the first edge everywhere
    std::vector<EdgeIndex> path;
    World intact;
    intact.broken.assign(static_cast<size_t>(dag.edge_count()), 0);
    return greedy_walk(dag, acc, intact).path;
}

}  // namespace

Json route_report(const Dag& dag, const Accumulation& acc) {
    Json j = accumulation_report(dag, acc);
    j["source_order"] = id_list(dag, acc.source_order);
    j["planned_path"] = id_list(dag, planned_path(dag, acc));
    return j;
}

std::string route_table(const Dag& dag, const Accumulation& acc) {
    std::ostringstream out;
    out << accumulation_table(dag, acc);
    auto join = [](const std::vector<std::string>& ids) {
        std::string s;
        for (size_t k = 0; k < ids.size(); ++k) s += (k ? " " : "") + ids[k];
        return s;
    };
    out << "attempt orders:\n";
    out << "  (source): " << join(id_list(dag, acc.source_order)) << "\n";
    for (int i = 0; i < dag.edge_count(); ++i) {
        const auto& order = acc.attempt_order[static_cast<size_t>(i)];
        if (order.empty()) continue;
        out << "  " << dag.edge_id(i) << ": " << join(id_list(dag, order)) << "\n";
    }
    out << "planned path: " << join(id_list(dag, planned_path(dag, acc))) << "\n";
    return out.str();
}

Json trial_report(const TrialSummary& s) {
    Json j;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    j["failure_rate"] = round12(s.failure_rate);
    j["predicted"] = round12(s.predicted);
    j["z_score"] = s.z_score ? Json(round12(*s.z_score)) : Json(nullptr);
    j["seed"] = s.seed;
    return j;
}

Json enumerate_report(const Dag& dag, const Accumulation& acc, const ExactResult& exact,
                      double tolerance) {
    Json j;
    j["model"] = acc.model == Model::eagle ? "eagle" : "bat";
    j["failure"] = round12(exact.failure);
    j["predicted"] = round12(acc.source_risk);
    j["match"] = std::abs(exact.failure - acc.source_risk) <= tolerance;
    j["tolerance"] = tolerance;
    j["edges"] = Json::array();
    for (int i = 0; i < dag.edge_count(); ++i) {
        const auto& st = exact.per_edge[static_cast<size_t>(i)];
        Json je;
        je["id"] = dag.edge_id(i);
        if (st) {
            je["commit_probability"] = round12(st->commit_probability);
            je["conditional_failure"] = round12(st->conditional_failure);
        } else {
            je["commit_probability"] = 0.0;
            je["conditional_failure"] = Json(nullptr);
        }
        if (!acc.remainder.empty())
            je["remainder"] = round12(acc.remainder[static_cast<size_t>(i)]);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

Json polynomial_report(const Dag& dag, const PiecewiseAccumulation& pw) {
    Json j = Json::array();
    for (int i = 0; i < dag.edge_count(); ++i) {
        Json je;
        je["edge"] = dag.edge_id(i);
        je["pieces"] = Json::array();
        for (const auto& piece : pw.pieces) {
            Json jp;
            jp["interval"] = Json::array({round12(piece.lo), round12(piece.hi)});
            jp["coefficients"] = Json::array();
            for (const BigInt& c : piece.accumulated[static_cast<size_t>(i)].coefficients())
                jp["coefficients"].push_back(coefficient_json(c));
            je["pieces"].push_back(std::move(jp));
        }
        j.push_back(std::move(je));
    }
    return j;
}

Json crossover_report(const Dag& dag, const std::vector<Crossover>& crossovers) {
    Json j = Json::array();
    for (const auto& c : crossovers) {
        Json jc;
        jc["alpha"] = round12(c.alpha);
        jc["below"] = dag.edge_id(c.below);
        jc["above"] = dag.edge_id(c.above);
        j.push_back(std::move(jc));
    }
    return j;
}

std::string sweep_csv(const Dag& dag, const SweepTable& table) {
    std::ostringstream out;
    out << "alpha";
    for (EdgeIndex e : table.choice_edges) out << "," << dag.edge_id(e);
    out << ",chosen\n";
    for (const auto& row : table.rows) {
        out << format12(row.alpha);
        for (double v : row.failure) out << "," << format12(v);
        out << "," << (row.chosen >= 0 ? dag.edge_id(row.chosen) : "") << "\n";
    }
    return out.str();
}

Json baseline_report(const Dag& dag, const StaticPath& path) {
    Json j;
    j["path"] = id_list(dag, path.edges);
    j["success"] = round12(path.success);
    j["failure"] = round12(1.0 - path.success);
    return j;
}

Json trace_json(const Dag& dag, const WalkTrace& trace) {
    Json j;
    j["outcome"] = trace.reached ? "reached-destination" : "stuck";
    j["path"] = id_list(dag, trace.path);
    j["steps"] = Json::array();
    for (const auto& s : trace.steps) {
        Json js;
        js["vertex"] = dag.vertex_name(s.at);
        js["broken"] = id_list(dag, s.broken_out_edges);
        js["chosen"] = s.chosen ? Json(dag.edge_id(*s.chosen)) : Json(nullptr);
        j["steps"].push_back(std::move(js));
    }
    return j;
}

}  // namespace riskpath
