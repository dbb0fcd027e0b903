#include "copvis/families.hpp"
#include "copvis/solver.hpp"
#include "doctest.h"

using namespace copvis;

namespace {

Graph named(const std::string& recipe) { return generate(parse_recipe(recipe)).graph; }

Winner win(const Graph& g, Variant v, int ell, int k) { return solve(g, GameSpec::make(g, v, ell, k)).winner(); }

struct Stubborn : CopPolicy {
    std::vector<Vertex> walk;
    std::vector<Vertex> place(const Graph&, const GameSpec&) override { return {walk[0]}; }
    std::vector<Vertex> move(const Graph&, const GameSpec&, const BeliefState&, int round) override
    {
        return {walk[round % walk.size()]};
    }
};

}  // namespace

TEST_CASE("small solves")
{
    auto c4 = named("cycle:4");
    CHECK(win(c4, Variant::Capture, 1, 1) == Winner::Robber);
    CHECK(win(c4, Variant::Capture, 1, 2) == Winner::Cops);
    CHECK(win(c4, Variant::See, 1, 1) == Winner::Cops);
    auto c5 = named("cycle:5");
    CHECK(win(c5, Variant::See, 1, 1) == Winner::Robber);
    auto k33 = named("bipartite:3,3");
    CHECK(win(k33, Variant::See, 1, 1) == Winner::Cops);
    CHECK(win(k33, Variant::Capture, 1, 1) == Winner::Robber);
    auto k1 = named("complete:1");
    auto s = solve(k1, GameSpec::make(k1, Variant::Capture, 1, 1));
    CHECK(s.winner() == Winner::Cops);
    CHECK(s.stats().rounds == 0);
}

TEST_CASE("cop numbers")
{
    CHECK(cop_number(named("complete:3"), Variant::ZeroVis, 0) == 2);
    CHECK(cop_number(named("tfamily:k=2,ell=1"), Variant::Capture, 1) == 2);
    for (int n = 1; n <= 12; ++n)
        for (int ell = 1; ell <= 2; ++ell) CHECK(cop_number(named("path:" + std::to_string(n)), Variant::Capture, ell) == 1);
}

TEST_CASE("profiles")
{
    auto c6 = profile(named("cycle:6"), {{2}, false, false, {}});
    CHECK(c6.per_ell[0].see == 1);
    CHECK(c6.per_ell[0].capture == 2);
    CHECK(c6.classical == 2);
    auto k5 = profile(named("complete:5"), {{1}, false, false, {}});
    CHECK(k5.per_ell[0].capture == 1);
    CHECK(k5.per_ell[0].see == 1);
    CHECK(k5.zero == 3);
    auto p4 = profile(named("path:4"), {{1, 2}, true, true, {}});
    CHECK(p4.classical == 1);
    CHECK(p4.zero == 1);
    CHECK(p4.domination == 2);
    CHECK(*p4.delayed == 1);
    for (const auto& e : p4.per_ell) {
        CHECK(e.capture == 1);
        CHECK(e.see == 1);
        CHECK(*e.monotone == 1);
    }
    CHECK(inequality_violations(p4).empty());
    Profile bad = p4;
    bad.per_ell[0].see = 3;
    CHECK_FALSE(inequality_violations(bad).empty());
}

TEST_CASE("kernel agrees with the reference solver")
{
    const Variant variants[] = {Variant::See, Variant::Capture, Variant::MonotoneCapture, Variant::TimeDelayed};
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = named("randconnected:n=" + std::to_string(4 + seed % 3) + ",seed=" + std::to_string(seed));
        for (Variant v : variants)
            for (int ell = 0; ell <= 1; ++ell)
                for (int k = 1; k <= 2; ++k) {
                    auto spec = GameSpec::make(g, v, ell, k);
                    auto fast = solve(g, spec);
                    auto slow = solve_reference(g, spec);
                    REQUIRE(slow.winner != Winner::Inconclusive);
                    CHECK(fast.winner() == slow.winner);
                    CHECK(fast.stats().rounds == slow.rounds);
                    ++compared;
                }
    }
    CHECK(compared == 12 * 4 * 2 * 2);
}

TEST_CASE("results do not depend on worker count")
{
    auto g = named("randconnected:n=9,seed=11");
    auto spec = GameSpec::make(g, Variant::Capture, 1, 2);
    SolveOptions one;
    one.workers = 1;
    SolveOptions four;
    four.workers = 4;
    auto a = solve(g, spec, one);
    auto b = solve(g, spec, four);
    CHECK(a.winner() == b.winner());
    CHECK(a.stats().frontier == b.stats().frontier);
    CHECK(a.policy_table() == b.policy_table());
}

TEST_CASE("budget gives inconclusive")
{
    auto g = named("petersen");
    SolveOptions tiny;
    tiny.max_states = 50;
    auto r = solve(g, GameSpec::make(g, Variant::Capture, 1, 2), tiny);
    CHECK(r.winner() == Winner::Inconclusive);
    CHECK(cop_number(g, Variant::Capture, 1, tiny) == std::nullopt);
}

TEST_CASE("solved policies play out")
{
    auto c4 = named("cycle:4");
    auto spec2 = GameSpec::make(c4, Variant::Capture, 1, 2);
    auto won = solve(c4, spec2);
    SolverCops cops(won);
    SolverRobber robber(won);
    auto tr = play_match(c4, spec2, cops, robber, 50);
    CHECK(tr.outcome == MatchOutcome::Captured);
    CHECK(tr.rounds == *won.stats().rounds);

    auto spec1 = GameSpec::make(c4, Variant::Capture, 1, 1);
    auto lost = solve(c4, spec1);
    SolverRobber escape(lost);
    // Every cyclic one-cop walk of period <= 4.
    std::vector<std::vector<Vertex>> walks{{0}, {0, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 0, 3}, {0, 1, 2, 1}};
    for (auto& w : walks) {
        Stubborn s;
        s.walk = w;
        CHECK(play_match(c4, spec1, s, escape, 100).outcome == MatchOutcome::Timeout);
    }

    auto k1 = named("complete:1");
    auto spec = GameSpec::make(k1, Variant::Capture, 1, 1);
    auto triv = solve(k1, spec);
    SolverCops c1(triv);
    SolverRobber r1(triv);
    CHECK(play_match(k1, spec, c1, r1, 5).rounds == 0);
}

TEST_CASE("optimal play meets the solved distance on random graphs")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = named("randconnected:n=7,seed=" + std::to_string(seed));
        for (Variant v : {Variant::See, Variant::Capture}) {
            auto spec = GameSpec::make(g, v, 1, 2);
            auto s = solve(g, spec);
            if (s.winner() != Winner::Cops) continue;
            SolverCops cops(s);
            SolverRobber robber(s);
            auto tr = play_match(g, spec, cops, robber, 100);
            CHECK(tr.outcome != MatchOutcome::Timeout);
            CHECK(tr.rounds == *s.stats().rounds);
        }
    }
}

TEST_CASE("witness search")
{
    std::uint64_t seed = 0;
    auto next = [&]() -> std::optional<Graph> { return named("randtree:n=7,seed=" + std::to_string(seed++)); };
    auto res = search_witness(
        next, [](const Graph&, const Profile& p) { return p.per_ell[0].capture > 1; }, {{1}, false, false, {}}, 20);
    CHECK_FALSE(res.witness);
    CHECK(res.candidates == 20);
}

TEST_CASE("kernel limits")
{
    auto g = named("path:65");
    CHECK_THROWS_AS(solve(g, GameSpec::make(g, Variant::Capture, 1, 1)), GraphError);
    auto h = named("path:10");
    CHECK_THROWS_AS(solve(h, GameSpec::make(h, Variant::Capture, 1, 9)), GraphError);
}
