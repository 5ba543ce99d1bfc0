#include <doctest.h>

#include <algorithm>
#include <set>

#include "riskpath/graph.hpp"
#include "riskpath/graph_io.hpp"
#include "support.hpp"

using namespace riskpath;
using namespace riskpath::testing;

TEST_CASE("figure graph validates") {
    Dag dag = figure1();
    CHECK(dag.edge_count() == 12);
    CHECK(dag.vertex_count() == 9);
    CHECK(dag.warnings().empty());
    CHECK(dag.has_numeric_risks());
}

TEST_CASE("validation rejects a two-edge cycle") {
    GraphSpec s;
    s.source = "1";
    s.destination = "3";
    s.edges = {{"a", "1", "2", 0.5}, {"b", "2", "1", 0.5}, {"c", "2", "3", 0.5}};
    CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("cycle"), GraphError);
}

TEST_CASE("validation rejects duplicate vertex pairs") {
    GraphSpec s;
    s.source = "1";
    s.destination = "2";
    s.edges = {{"a", "1", "2", 0.5}, {"b", "1", "2", 0.5}};
    CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("duplicate edge between"),
                         GraphError);
}

TEST_CASE("validation rejects bad input") {
    GraphSpec base;
    base.source = "1";
    base.destination = "2";
    base.edges = {{"a", "1", "2", 0.5}};

    SUBCASE("duplicate edge id") {
        GraphSpec s = base;
        s.edges.push_back({"a", "1", "3", 0.5});
        CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("duplicate edge id"), GraphError);
    }
    SUBCASE("risk out of range") {
        GraphSpec s = base;
        s.edges[0].risk = 1.5;
        CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("outside [0,1]"), GraphError);
    }
    SUBCASE("negative risk") {
        GraphSpec s = base;
        s.edges[0].risk = -0.1;
        CHECK_THROWS_AS(Dag::validate(s), GraphError);
    }
    SUBCASE("self loop") {
        GraphSpec s = base;
        s.edges.push_back({"loop", "3", "3", 0.5});
        CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("self-loop"), GraphError);
    }
    SUBCASE("missing source") {
        GraphSpec s = base;
        s.source = "";
        CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("missing source"), GraphError);
    }
    SUBCASE("source equals destination") {
        GraphSpec s = base;
        s.destination = "1";
        CHECK_THROWS_AS(Dag::validate(s), GraphError);
    }
    SUBCASE("dangling vertex reference") {
        GraphSpec s = base;
        s.vertices = {"1", "2"};
        s.edges.push_back({"d", "1", "ghost", 0.5});
        CHECK_THROWS_WITH_AS(Dag::validate(s), doctest::Contains("dangling"), GraphError);
    }
}

TEST_CASE("edge neighborhoods on the figure graph") {
    Dag dag = figure1();
    auto ids = [&dag](const std::vector<EdgeIndex>& idx) {
        std::vector<std::string> out;
        for (EdgeIndex i : idx) out.push_back(dag.edge_id(i));
        return out;
    };
    CHECK(ids(dag.neighbors(dag.edge_index("1->2"))) ==
          std::vector<std::string>{"2->4", "2->5"});
    CHECK(ids(dag.neighbors(dag.edge_index("2->4"))) ==
          std::vector<std::string>{"4->6", "4->7"});
    CHECK(dag.neighbors(dag.edge_index("6->9")).empty());
    CHECK_THROWS_AS(dag.edge_index("9->1"), GraphError);
}

TEST_CASE("neighborhood is empty for terminal edges even when the destination has out-edges") {
    GraphSpec s;
    s.source = "s";
    s.destination = "d";
    s.edges = {{"s->d", "s", "d", 0.5}, {"d->x", "d", "x", 0.5}};
    Dag dag = Dag::validate(s);
    CHECK(dag.neighbors(dag.edge_index("s->d")).empty());
}

TEST_CASE("reverse topological edge order is a linear extension of N") {
    SUBCASE("chain") {
        Dag dag = chain({0.5, 0.5});
        std::vector<std::string> order;
        for (EdgeIndex i : dag.reverse_topological_edge_order()) order.push_back(dag.edge_id(i));
        CHECK(order == std::vector<std::string>{"v1->t", "s->v1"});
    }
    SUBCASE("single edge") {
        Dag dag = chain({0.25});
        CHECK(dag.reverse_topological_edge_order() == std::vector<EdgeIndex>{0});
    }
    SUBCASE("every j in N(i) precedes i, brute-force over random graphs") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Dag dag = random_dag(seed);
            const auto& order = dag.reverse_topological_edge_order();
            std::vector<int> position(static_cast<size_t>(dag.edge_count()));
            for (size_t k = 0; k < order.size(); ++k)
                position[static_cast<size_t>(order[k])] = static_cast<int>(k);
            for (int i = 0; i < dag.edge_count(); ++i)
                for (EdgeIndex j : dag.neighbors(i))
                    CHECK(position[static_cast<size_t>(j)] < position[static_cast<size_t>(i)]);
        }
    }
    SUBCASE("figure graph: edges into the destination come first") {
        Dag dag = figure1();
        const auto& order = dag.reverse_topological_edge_order();
        for (size_t k = 0; k < 3; ++k) CHECK(dag.terminal(order[k]));
    }
}

TEST_CASE("N(i) members all start at head(i)") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Dag dag = random_dag(seed);
        for (int i = 0; i < dag.edge_count(); ++i)
            for (EdgeIndex j : dag.neighbors(i))
                CHECK(dag.edge(j).tail == dag.edge(i).head);
    }
}

TEST_CASE("minimal JSON graph") {
    Dag dag = parse_graph(R"({"edges":[{"id":"e1","tail":"a","head":"b"}],
                              "source":"a","destination":"b","uniform_risk":0.5})");
    CHECK(dag.edge_count() == 1);
    CHECK(dag.vertex_count() == 2);
    CHECK(dag.risk(0) == 0.5);
}

TEST_CASE("JSON without risk and without uniform_risk parses but has no numeric risks") {
    Dag dag = parse_graph(R"({"edges":[{"id":"e1","tail":"a","head":"b"}],
                              "source":"a","destination":"b"})");
    CHECK_FALSE(dag.has_numeric_risks());
    CHECK_THROWS_WITH_AS(dag.risk(0), doctest::Contains("missing numeric risk"), GraphError);
}

TEST_CASE("malformed JSON and schema violations") {
    CHECK_THROWS_WITH_AS(parse_graph_json("{nope"), doctest::Contains("malformed"), GraphError);
    CHECK_THROWS_AS(parse_graph_json(R"({"source":"a","destination":"b"})"), GraphError);
    CHECK_THROWS_AS(
        parse_graph_json(R"({"edges":[{"id":"e"}],"source":"a","destination":"b"})"),
        GraphError);
}

TEST_CASE("serialize/parse round-trips random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Dag dag = random_dag(seed);
        Dag back = parse_graph(serialize_graph(dag));
        REQUIRE(back.edge_count() == dag.edge_count());
        for (int i = 0; i < dag.edge_count(); ++i) {
            CHECK(back.edge_id(i) == dag.edge_id(i));
            CHECK(back.vertex_name(back.edge(i).tail) == dag.vertex_name(dag.edge(i).tail));
            CHECK(back.vertex_name(back.edge(i).head) == dag.vertex_name(dag.edge(i).head));
            CHECK(back.edge(i).risk == dag.edge(i).risk);
        }
        CHECK(back.vertex_name(back.source()) == dag.vertex_name(dag.source()));
        CHECK(back.vertex_name(back.destination()) == dag.vertex_name(dag.destination()));
    }
}

TEST_CASE("a back edge turns a random DAG into a rejected cycle") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 25 && seed < 200; ++seed) {
        Dag dag = random_dag(seed);
        if (dag.edge_count() == 0) continue;
        GraphSpec s = dag.spec();
        const EdgeSpec& e = s.edges.front();
        s.edges.push_back({"back-edge", e.head, e.tail, 0.5});
        CHECK_THROWS_AS(Dag::validate(s), GraphError);
        ++tested;
    }
    CHECK(tested == 25);
}

TEST_CASE("DOT subset reader") {
    Dag dag = parse_graph_dot(R"(
        // comment
        digraph g {
          source = "s"; destination = "t";
          s -> a [risk=0.25];
          a -> t [risk=0.5, color=red];
          s -> t [risk=0.75];
        })");
    CHECK(dag.edge_count() == 3);
    CHECK(dag.risk(dag.edge_index("s->a")) == 0.25);
    CHECK(dag.risk(dag.edge_index("a->t")) == 0.5);

    SUBCASE("source/destination inferred from unique source and sink") {
        Dag inferred = parse_graph_dot("digraph { a -> b [risk=0.5]\n b -> c [risk=0.5] }");
        CHECK(inferred.vertex_name(inferred.source()) == "a");
        CHECK(inferred.vertex_name(inferred.destination()) == "c");
    }
    SUBCASE("ambiguous endpoints are an error") {
        CHECK_THROWS_AS(
            parse_graph_dot("digraph { a -> c [risk=0.1]\n b -> c [risk=0.1] }"), GraphError);
    }
    SUBCASE("auto-detection rejects junk") {
        CHECK_THROWS_AS(parse_graph("what is this"), GraphError);
    }
}

TEST_CASE("uniform risk substitution overrides per-edge risks") {
    Dag dag = figure2().with_uniform_risk(0.25);
    for (int i = 0; i < dag.edge_count(); ++i) CHECK(dag.risk(i) == 0.25);
}

TEST_CASE("unreachable vertices are flagged, not rejected") {
    GraphSpec s;
    s.source = "s";
    s.destination = "t";
    s.edges = {{"s->t", "s", "t", 0.5}, {"x->y", "x", "y", 0.5}};
    Dag dag = Dag::validate(s);
    CHECK(dag.warnings().size() >= 2);
}

TEST_CASE("dead ends are permitted") {
    GraphSpec s;
    s.source = "s";
    s.destination = "t";
    s.edges = {{"s->t", "s", "t", 0.5}, {"s->dead", "s", "dead", 0.5}};
    Dag dag = Dag::validate(s);
    CHECK(dag.out_edges(dag.vertex_index("dead")).empty());
}
