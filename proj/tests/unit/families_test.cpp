#include <set>

#include "copvis/families.hpp"
#include "doctest.h"

using namespace copvis;

TEST_CASE("fixed families")
{
    CHECK(generate(parse_recipe("path:5")).graph.size() == 4);
    CHECK(generate(parse_recipe("cycle:6")).graph.size() == 6);
    CHECK(generate(parse_recipe("complete:5")).graph.size() == 10);
    CHECK(generate(parse_recipe("bipartite:2,3")).graph.size() == 6);
    auto pet = generate(parse_recipe("petersen")).graph;
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(metrics(pet).diameter == 2);
    auto spider = generate(parse_recipe("spider:4,4,4"));
    CHECK(spider.graph.order() == 13);
    CHECK(spider.graph.is_tree());
}

TEST_CASE("hub family shape")
{
    auto t = generate(parse_recipe("tfamily:k=2,ell=1"));
    CHECK(t.graph.order() == 13);
    CHECK(t.graph.is_tree());
    CHECK(t.labels.at("q") == std::vector<Vertex>{12});
    CHECK(t.labels.at("attach") == std::vector<Vertex>{0, 4, 8});
    for (Vertex r : t.labels.at("attach")) CHECK(t.graph.dist(12, r) == 4);
    REQUIRE(t.certificate);
    CHECK(t.certificate->rank == 2);
    // The witness of a hub-family member uses the whole tree.
    CHECK(t.certificate->vertices().size() == 13);

    auto t3 = generate(parse_recipe("tfamily:k=3,ell=2"));
    // |T_k| = 3|T_{k-1}| + 3(2l+1) + 1
    CHECK(t3.graph.order() == 3 * (3 * 1 + 15 + 1) + 15 + 1);
    CHECK(t3.graph.is_tree());

    auto moved = generate(parse_recipe("tfamily:k=3,ell=1,attach=-1;3"));
    CHECK(moved.graph.is_tree());
    CHECK_THROWS_AS(generate(parse_recipe("tfamily:k=2,ell=1,attach=5")), GraphError);
}

TEST_CASE("subdivided binary tree")
{
    auto s = generate(parse_recipe("subdivided:3,3"));
    CHECK(s.graph.order() == 15 + 14 * 3);
    CHECK(s.graph.is_tree());
    CHECK(s.graph.dist(0, 1) == 4);
    CHECK(s.graph.dist(7, 14) == 24);
    auto path = subdivided_edge_path(3, 3, 4);
    CHECK(s.graph.adjacent(1, path.front()));
    CHECK(s.graph.adjacent(path.back(), 4));
}

TEST_CASE("random generators are seeded and valid")
{
    auto a = generate(parse_recipe("randtree:n=12,seed=5")).graph;
    auto b = generate(parse_recipe("randtree:n=12,seed=5")).graph;
    CHECK(a.edges() == b.edges());
    CHECK(a.is_tree());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = generate(parse_recipe("randconnected:n=9,seed=" + std::to_string(seed))).graph;
        CHECK(g.connected());
    }
}

TEST_CASE("recipe errors")
{
    CHECK_THROWS_AS(parse_recipe("hypercube:3"), GraphError);
    CHECK_THROWS_AS(parse_recipe("path:x"), GraphError);
    CHECK_THROWS_AS(generate(parse_recipe("cycle:2")), GraphError);
}
