#include <sstream>

#include "copvis/families.hpp"
#include "copvis/io.hpp"
#include "copvis/treerank.hpp"
#include "doctest.h"

using namespace copvis;

TEST_CASE("graph text and object formats")
{
    auto f = generate(parse_recipe("tfamily:k=2,ell=1"));
    std::istringstream text(write_graph(f.graph, f.labels));
    Labels labels;
    auto g = read_graph(text, &labels);
    CHECK(g.edges() == f.graph.edges());
    CHECK(labels == f.labels);

    std::istringstream obj(to_json(f.graph, f.labels).dump());
    Labels l2;
    CHECK(read_graph(obj, &l2).edges() == f.graph.edges());
    CHECK(l2 == f.labels);

    std::istringstream c4("# square\n4 4\n0 1\n1 2\n\n2 3\n3 0\n");
    CHECK(graph_hash(read_graph(c4)) == graph_hash(generate(parse_recipe("cycle:4")).graph));

    for (const char* bad : {"", "3 2\n0 1\n", "2 1\n0 1 5\n", "2 1\n0 0\n", "{\"n\": 2}", "{nope", "2 1\n0 x\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_graph(in), GraphError);
    }
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), GraphError);
}

TEST_CASE("script formats")
{
    Script s{{{0, 1, 2}, {3, 3, 2}}};
    std::istringstream text("# two cops\n" + write_script(s));
    CHECK(read_script(text).walks == s.walks);
    std::istringstream obj(to_json(s).dump());
    CHECK(read_script(obj).walks == s.walks);
    std::istringstream bad("0 1 q\n");
    CHECK_THROWS_AS(read_script(bad), GraphError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_script(empty), GraphError);
}

TEST_CASE("structured exports")
{
    auto g = generate(parse_recipe("cycle:4")).graph;
    auto spec = GameSpec::make(g, Variant::Capture, 1, 2);
    auto game = solve(g, spec);
    auto j = solve_json(game);
    CHECK(j["winner"] == "COPS");
    CHECK_FALSE(j.contains("time_ms"));
    CHECK(solve_json(game, 1.5).contains("time_ms"));
    CHECK(j.dump() == solve_json(game).dump());
    auto pol = policy_json(game);
    CHECK(pol["policy"].size() == game.policy_table().size());

    Script s{{{0, 1, 2, 3}}};
    auto rep = simulate_script(g, GameSpec::make(g, Variant::See, 0, 1), s);
    auto rj = to_json(rep);
    CHECK(rj["territory"].size() == rep.territory.size());
    CHECK(rj["territory"][0] == Json({1, 2, 3}));
    auto dot = report_dot(g, s, rep);
    CHECK(dot.find("graph round_0 {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("3 [style=dashed]") != std::string::npos);

    auto t = generate(parse_recipe("tfamily:k=2,ell=1"));
    auto cj = to_json(tree_rank(t.graph, 1).certificate);
    CHECK(cj["rank"] == 2);
    CHECK(cj["branches"].size() == 3);
}
