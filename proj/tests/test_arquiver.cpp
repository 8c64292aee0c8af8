#include <doctest.h>

#include "arcoalg/arquiver.hpp"

#include <json.hpp>

#include <regex>
#include <sstream>
#include <set>

using namespace arcoalg::ar;

namespace {

// A single mesh A -> B, A -> C, B -> D, C -> D with A ⇢ D.
ARQuiver diamond() {
    ARQuiver q;
    q.add_node({"A", "A", 1, false, false, 1, 0, 0});
    q.add_node({"B", "B", 2, false, false, 2, 1, 0});
    q.add_node({"C", "C", 1, false, false, 0, 1, 0});
    q.add_node({"D", "D", 1, false, false, 1, 2, 0});
    q.add_arrow("A", "B");
    q.add_arrow("A", "C");
    q.add_arrow("B", "D");
    q.add_arrow("C", "D");
    q.set_translation("A", "D");
    return q;
}

ARQuiver without(const ARQuiver& q, const Edge& drop) {
    ARQuiver out;
    for (const auto& n : q.nodes()) out.add_node(n);
    for (const auto& e : q.arrows())
        if (e != drop) out.add_arrow(e.source, e.target);
    for (const auto& t : q.translation()) out.set_translation(t.source, t.target);
    return out;
}

}  // namespace

TEST_CASE("graph bookkeeping") {
    auto q = diamond();
    q.add_node({"A", "other", 9});
    q.add_arrow("A", "B");
    q.add_arrow("A", "nowhere");
    CHECK(q.nodes().size() == 4);
    CHECK(q.node("A").label == "A");
    CHECK(q.arrows().size() == 4);
    CHECK(q.targets_of("A") == std::vector<std::string>{"B", "C"});
    CHECK(q.sources_of("D") == std::vector<std::string>{"B", "C"});
    CHECK(q.translate("A") == std::optional<std::string>("D"));
    CHECK_FALSE(q.translate("B"));
}

TEST_CASE("mesh lint accepts a mesh and catches a missing arrow") {
    CHECK(mesh_lint(diamond()).empty());
    const auto broken = mesh_lint(without(diamond(), {"A", "B"}));
    REQUIRE(broken.size() == 1);
    CHECK(broken[0].node == "A");
    CHECK(broken[0].translate == "D");
    CHECK(broken[0].out_of_node == std::vector<std::string>{"C"});
    CHECK(broken[0].into_translate == std::vector<std::string>{"B", "C"});
}

TEST_CASE("mesh lint skips incomplete nodes") {
    auto q = without(diamond(), {"A", "B"});
    ARQuiver marked;
    for (auto n : q.nodes()) {
        n.incomplete = n.id == "A";
        marked.add_node(n);
    }
    for (const auto& e : q.arrows()) marked.add_arrow(e.source, e.target);
    marked.set_translation("A", "D");
    CHECK(mesh_lint(marked).empty());
}

TEST_CASE("stable part drops injectives and is idempotent") {
    auto q = diamond();
    q.add_node({"P", "P", 3, true});
    q.add_arrow("B", "P");
    q.add_arrow("P", "D");
    const auto s = stable(q);
    CHECK_FALSE(s.contains("P"));
    CHECK(s.arrows().size() == 4);
    CHECK(stable(s) == s);
}

TEST_CASE("empty quiver renders to empty structures") {
    const ARQuiver q;
    CHECK(to_dot(q) == "digraph \"ar\" {\n  node [shape=box];\n}\n");
    CHECK(to_json(q) == "{\n  \"nodes\": [],\n  \"arrows\": [],\n  \"translation\": []\n}\n");
    CHECK(to_ascii(q).empty());
    CHECK(mesh_lint(q).empty());
}

TEST_CASE("DOT and JSON describe the same graph") {
    const auto q = diamond();
    const auto dot = to_dot(q);
    const auto json = nlohmann::json::parse(to_json(q));

    std::set<std::string> dot_nodes, json_nodes;
    std::set<Edge> dot_edges, json_edges;
    const std::regex node_re(R"re(^\s*"([^"]+)" \[label=)re");
    const std::regex edge_re(R"re(^\s*"([^"]+)" -> "([^"]+)";)re");
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
        std::smatch m;
        if (std::regex_search(line, m, node_re)) dot_nodes.insert(m[1]);
        if (std::regex_search(line, m, edge_re)) dot_edges.insert({m[1], m[2]});
    }
    for (const auto& n : json["nodes"]) json_nodes.insert(n["id"].get<std::string>());
    for (const auto& e : json["arrows"]) json_edges.insert({e["source"], e["target"]});
    CHECK(dot_nodes == json_nodes);
    CHECK(dot_edges == json_edges);
    CHECK(dot.find("\"A\" -> \"D\" [style=dashed, constraint=false];") != std::string::npos);
}

TEST_CASE("ascii grid places labels by row and column") {
    const auto text = to_ascii(diamond());
    CHECK(text.find('A') != std::string::npos);
    CHECK(text.find("..>") != std::string::npos);
    for (std::size_t pos = 0; (pos = text.find(" \n", pos)) != std::string::npos;) FAIL("trailing space");
}
