#include "riskpath/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace riskpath {

namespace {

std::string format_risk(double r) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", r);
    return buf;
}

std::string strip_quotes(std::string s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_probability(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw GraphError(what + ": not a number: '" + text + "'");
    }
}

}  // namespace

Dag parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw GraphError("graph JSON must be an object");

    GraphSpec spec;
    try {
        if (!j.contains("source")) throw GraphError("missing field 'source'");
        if (!j.contains("destination")) throw GraphError("missing field 'destination'");
        spec.source = j.at("source").get<std::string>();
        spec.destination = j.at("destination").get<std::string>();
        if (j.contains("uniform_risk")) spec.uniform_risk = j.at("uniform_risk").get<double>();
        if (j.contains("vertices")) spec.vertices = j.at("vertices").get<std::vector<std::string>>();
        if (!j.contains("edges") || !j.at("edges").is_array())
            throw GraphError("missing field 'edges' (array)");
        for (const auto& je : j.at("edges")) {
            EdgeSpec e;
            if (!je.contains("id") || !je.contains("tail") || !je.contains("head"))
                throw GraphError("edge entry must have 'id', 'tail' and 'head'");
            e.id = je.at("id").get<std::string>();
            e.tail = je.at("tail").get<std::string>();
            e.head = je.at("head").get<std::string>();
            if (je.contains("risk")) e.risk = je.at("risk").get<double>();
            spec.edges.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("graph JSON schema violation: ") + e.what());
    }
    return Dag::validate(spec);
}

// Line-oriented subset of DOT: `digraph ... {`, statements terminated by `;`
// or end of line. Recognized statements:
//   a -> b [risk=0.5];       edge (id becomes "a->b")
//   source = s;  destination = t;  uniform_risk = 0.25;
// Node declarations and unknown attributes are ignored. When source or
// destination are not given they fall back to the unique source/sink vertex.
Dag parse_graph_dot(std::string_view text) {
    GraphSpec spec;
    std::string body(text);

    // strip /* */ comments, then // and # line comments
    for (size_t p = body.find("/*"); p != std::string::npos; p = body.find("/*")) {
        size_t q = body.find("*/", p + 2);
        if (q == std::string::npos) throw GraphError("DOT: unterminated comment");
        body.erase(p, q - p + 2);
    }
    std::string cleaned;
    {
        std::istringstream lines(body);
        std::string line;
        while (std::getline(lines, line)) {
            size_t c = std::min(line.find("//"), line.find('#'));
            if (c != std::string::npos) line.erase(c);
            cleaned += line;
            cleaned += '\n';
        }
    }

    size_t open = cleaned.find('{');
    size_t close = cleaned.rfind('}');
    if (cleaned.find("digraph") == std::string::npos || open == std::string::npos ||
        close == std::string::npos || close < open)
        throw GraphError("DOT: expected 'digraph ... { ... }'");
    std::string inner = cleaned.substr(open + 1, close - open - 1);
    for (char& c : inner)
        if (c == '\n') c = ';';

    std::istringstream stmts(inner);
    std::string stmt;
    while (std::getline(stmts, stmt, ';')) {
        stmt = trim(stmt);
        if (stmt.empty()) continue;
        size_t arrow = stmt.find("->");
        if (arrow != std::string::npos) {
            std::string tail = strip_quotes(trim(stmt.substr(0, arrow)));
            std::string rest = trim(stmt.substr(arrow + 2));
            std::string attrs;
            size_t br = rest.find('[');
            if (br != std::string::npos) {
                size_t end = rest.find(']', br);
                if (end == std::string::npos) throw GraphError("DOT: unterminated attribute list");
                attrs = rest.substr(br + 1, end - br - 1);
                rest = trim(rest.substr(0, br));
            }
            std::string head = strip_quotes(trim(rest));
            if (tail.empty() || head.empty()) throw GraphError("DOT: malformed edge '" + stmt + "'");
            EdgeSpec e;
            e.tail = tail;
            e.head = head;
            e.id = tail + "->" + head;
            std::istringstream attr_list(attrs);
            std::string attr;
            while (std::getline(attr_list, attr, ',')) {
                size_t eq = attr.find('=');
                if (eq == std::string::npos) continue;
                std::string key = trim(attr.substr(0, eq));
                std::string value = strip_quotes(trim(attr.substr(eq + 1)));
                if (key == "risk") e.risk = parse_probability(value, "edge '" + e.id + "' risk");
            }
            spec.edges.push_back(std::move(e));
            continue;
        }
        size_t eq = stmt.find('=');
        if (eq != std::string::npos) {
            std::string key = trim(stmt.substr(0, eq));
            std::string value = strip_quotes(trim(stmt.substr(eq + 1)));
            if (key == "source") spec.source = value;
            else if (key == "destination") spec.destination = value;
            else if (key == "uniform_risk")
                spec.uniform_risk = parse_probability(value, "uniform_risk");
            // other graph attributes ignored
        }
        // bare node declarations ignored; vertices come from edges
    }

    if (spec.source.empty() || spec.destination.empty()) {
        // fall back to the unique source / sink vertex
        std::map<std::string, std::pair<int, int>> degree;  // name -> (in, out)
        for (const auto& e : spec.edges) {
            degree[e.tail].second++;
            degree[e.head].first++;
        }
        std::vector<std::string> sources, sinks;
        for (const auto& [name, d] : degree) {
            if (d.first == 0) sources.push_back(name);
            if (d.second == 0) sinks.push_back(name);
        }
        if (spec.source.empty()) {
            if (sources.size() != 1)
                throw GraphError("DOT: 'source' not given and no unique source vertex");
            spec.source = sources.front();
        }
        if (spec.destination.empty()) {
            if (sinks.size() != 1)
                throw GraphError("DOT: 'destination' not given and no unique sink vertex");
            spec.destination = sinks.front();
        }
    }
    return Dag::validate(spec);
}

Dag parse_graph(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    if (text.find("digraph") != std::string_view::npos) return parse_graph_dot(text);
    throw GraphError("unrecognized graph format (expected JSON object or DOT digraph)");
}

std::string serialize_graph(const Dag& dag) {
    nlohmann::ordered_json j;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : dag.edges()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["tail"] = dag.vertex_name(e.tail);
        je["head"] = dag.vertex_name(e.head);
        if (e.risk) je["risk"] = nlohmann::json::parse(format_risk(*e.risk));
        j["edges"].push_back(std::move(je));
    }
    j["source"] = dag.vertex_name(dag.source());
    j["destination"] = dag.vertex_name(dag.destination());
    return j.dump(2) + "\n";
}

}  // namespace riskpath
