#include "copvis/families.hpp"
#include "copvis/solver.hpp"
#include "copvis/treerank.hpp"
#include "doctest.h"

using namespace copvis;

namespace {
Family fam(const std::string& r) { return generate(parse_recipe(r)); }
}  // namespace

TEST_CASE("ranks of named trees")
{
    CHECK(tree_rank(fam("complete:1").graph, 1).rank == 1);
    for (int n = 1; n <= 15; ++n) CHECK(tree_rank(fam("path:" + std::to_string(n)).graph, 1).rank == 1);
    auto spider = fam("tfamily:k=2,ell=1");
    auto r = tree_rank(spider.graph, 1);
    CHECK(r.rank == 2);
    CHECK(r.certificate.hub == spider.labels.at("q").front());
    CHECK(verify_certificate(spider.graph, r.certificate, 1));
    CHECK(tree_rank(spider.graph, 2).rank == 1);
    CHECK_THROWS_AS(tree_rank(fam("cycle:4").graph, 1), GraphError);
}

TEST_CASE("hub family members have their rank")
{
    for (int ell = 0; ell <= 2; ++ell)
        for (int k = 1; k <= 3; ++k) {
            auto f = fam("tfamily:k=" + std::to_string(k) + ",ell=" + std::to_string(ell));
            CHECK(tree_rank(f.graph, ell).rank == k);
            REQUIRE(f.certificate);
            CHECK(verify_certificate(f.graph, *f.certificate, ell));
        }
    // Attachment away from the child hub.
    auto moved = fam("tfamily:k=3,ell=1,attach=-1;3");
    CHECK(tree_rank(moved.graph, 1).rank == 3);
    CHECK(verify_certificate(moved.graph, *moved.certificate, 1));
    CHECK(tree_rank(fam("subdivided:3,3").graph, 1).rank == 2);
}

TEST_CASE("broken certificates are rejected")
{
    auto f = fam("tfamily:k=2,ell=1");
    auto c = *f.certificate;
    auto shorter = c;
    shorter.branches[0].path.pop_back();
    CHECK_FALSE(verify_certificate(f.graph, shorter, 1));
    auto reused = c;
    reused.branches[1] = reused.branches[0];
    CHECK_FALSE(verify_certificate(f.graph, reused, 1));
    auto inflated = c;
    inflated.rank = 3;
    CHECK_FALSE(verify_certificate(f.graph, inflated, 1));
    CHECK_FALSE(verify_certificate(f.graph, c, 2));
}

TEST_CASE("random tree certificates verify and ranks are monotone")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto t = fam("randtree:n=" + std::to_string(10 + seed % 30) + ",seed=" + std::to_string(seed)).graph;
        for (int ell = 0; ell <= 1; ++ell) {
            auto r = tree_rank(t, ell);
            CHECK(verify_certificate(t, r.certificate, ell));
            // Removing a leaf cannot raise the rank.
            std::vector<Vertex> keep;
            bool dropped = false;
            for (Vertex v = 0; v < t.order(); ++v) {
                if (!dropped && t.degree(v) == 1) {
                    dropped = true;
                    continue;
                }
                keep.push_back(v);
            }
            CHECK(tree_rank(t.induced(keep), ell).rank <= r.rank);
        }
    }
}

TEST_CASE("rank equals the solved cop number on small trees")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto t = fam("randtree:n=" + std::to_string(6 + seed % 5) + ",seed=" + std::to_string(seed)).graph;
        CHECK(cop_number(t, Variant::Capture, 1) == tree_rank(t, 1).rank);
    }
    auto spider = fam("tfamily:k=2,ell=1").graph;
    CHECK(cop_number(spider, Variant::Capture, 1) == 2);
}

TEST_CASE("height bound readings")
{
    auto spider = fam("tfamily:k=2,ell=1").graph;
    auto hb = height_bound(spider, 1);
    CHECK(hb.centre_height == 1);
    CHECK(hb.rooted_height == 2);
    auto p9 = fam("path:9").graph;
    CHECK(height_bound(p9, 1).centre_height == 1);
}
