#include <random>

#include "copvis/engine.hpp"
#include "copvis/families.hpp"
#include "doctest.h"

using namespace copvis;

namespace {

Graph named(const char* recipe) { return generate(parse_recipe(recipe)).graph; }

std::vector<Vertex> seen_of(const BranchSet& bs)
{
    std::vector<Vertex> out;
    for (const auto& b : bs.branches)
        if (b.tag == BranchTag::Seen) out.push_back(b.state.robber);
    return out;
}

const Branch* hidden_of(const BranchSet& bs)
{
    for (const auto& b : bs.branches)
        if (b.tag == BranchTag::Hidden) return &b;
    return nullptr;
}

struct RandomCops : CopPolicy {
    std::mt19937_64 rng;
    explicit RandomCops(std::uint64_t seed) : rng(seed) {}
    std::vector<Vertex> place(const Graph& g, const GameSpec& spec) override
    {
        std::vector<Vertex> out;
        for (int i = 0; i < spec.cops; ++i) out.push_back(std::uniform_int_distribution<int>(0, g.order() - 1)(rng));
        return out;
    }
    std::vector<Vertex> move(const Graph& g, const GameSpec&, const BeliefState& s, int) override
    {
        std::vector<Vertex> out;
        for (Vertex c : s.cops) {
            auto nb = g.neighbors(c);
            int pick = std::uniform_int_distribution<int>(0, static_cast<int>(nb.size()))(rng);
            out.push_back(pick == 0 ? c : nb[pick - 1]);
        }
        return out;
    }
};

struct RandomRobber : RobberPolicy {
    std::mt19937_64 rng;
    explicit RandomRobber(std::uint64_t seed) : rng(seed) {}
    Vertex place(const Graph& g, const GameSpec&, std::span<const Vertex> cops) override
    {
        std::vector<Vertex> free;
        for (Vertex v = 0; v < g.order(); ++v)
            if (std::find(cops.begin(), cops.end(), v) == cops.end()) free.push_back(v);
        return free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
    Vertex move(const Graph& g, const GameSpec&, const BeliefState& s, Vertex r, int) override
    {
        std::vector<Vertex> free;
        for (Vertex v : g.closed_neighborhood(r).members())
            if (std::find(s.cops.begin(), s.cops.end(), v) == s.cops.end()) free.push_back(v);
        return free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
};

}  // namespace

TEST_CASE("spec normalisation")
{
    auto c6 = named("cycle:6");
    auto s = GameSpec::make(c6, Variant::Classical, 1, 1);
    CHECK(s.variant == Variant::Capture);
    CHECK(s.ell == 3);
    CHECK(GameSpec::make(c6, Variant::ZeroVis, 2, 1).ell == 0);
    CHECK_THROWS(GameSpec::make(c6, Variant::See, 1, 0));
    CHECK(parse_variant("monotone") == Variant::MonotoneCapture);
}

TEST_CASE("initial branches")
{
    auto k1 = named("complete:1");
    CHECK(initial_branches(k1, GameSpec::make(k1, Variant::Capture, 1, 1), {0}).cop_win);

    auto c5 = named("cycle:5");
    auto see = GameSpec::make(c5, Variant::See, 1, 1);
    auto bs = initial_branches(c5, see, {0});
    CHECK(seen_of(bs) == std::vector<Vertex>{1, 4});
    REQUIRE(hidden_of(bs));
    CHECK(hidden_of(bs)->state.territory.members() == std::vector<Vertex>{2, 3});

    auto c4 = named("cycle:4");
    bs = initial_branches(c4, GameSpec::make(c4, Variant::Capture, 1, 1), {0});
    CHECK(seen_of(bs) == std::vector<Vertex>{1, 3});
    CHECK(hidden_of(bs)->state.territory.members() == std::vector<Vertex>{2});
    CHECK_FALSE(bs.cop_win);

    auto d = initial_branches(c4, GameSpec::make(c4, Variant::TimeDelayed, 1, 1), {0});
    REQUIRE(d.branches.size() == 1);
    CHECK(d.branches[0].state.phase == Phase::Delayed);
    CHECK(d.branches[0].state.territory.members() == std::vector<Vertex>{1, 2, 3});

    CHECK_THROWS_AS(initial_branches(c4, GameSpec::make(c4, Variant::Capture, 1, 2), {0}), MoveError);
}

TEST_CASE("cop turn")
{
    auto c4 = named("cycle:4");
    auto spec = GameSpec::make(c4, Variant::Capture, 1, 1);
    BeliefState s{{0}, Phase::Invisible, VertexSet(4, {2}), -1, std::nullopt, false};
    auto bs = cop_turn(c4, spec, s, {1});
    CHECK(seen_of(bs) == std::vector<Vertex>{2});
    CHECK(hidden_of(bs) == nullptr);
    CHECK_THROWS_AS(cop_turn(c4, spec, s, {2}), MoveError);

    BeliefState v{{0}, Phase::Visible, VertexSet(4), 1, std::nullopt, false};
    bs = cop_turn(c4, spec, v, {1});
    CHECK(bs.cop_win);
    CHECK(bs.branches.front().tag == BranchTag::Captured);

    auto p5 = named("path:5");
    auto sp = GameSpec::make(p5, Variant::Capture, 1, 1);
    BeliefState t{{0}, Phase::Invisible, VertexSet(5, {3, 4}), -1, std::nullopt, false};
    bs = cop_turn(p5, sp, t, {1});
    CHECK(seen_of(bs).empty());
    CHECK(hidden_of(bs)->state.territory.members() == std::vector<Vertex>{3, 4});
}

TEST_CASE("monotone cop turn rejects growth")
{
    auto p5 = named("path:5");
    auto spec = GameSpec::make(p5, Variant::MonotoneCapture, 0, 1);
    BeliefState s{{2}, Phase::Invisible, VertexSet(5, {3, 4}), -1, VertexSet(5, {4}), false};
    CHECK_THROWS_AS(cop_turn(p5, spec, s, {2}), MonotonicityError);
    auto ok = cop_turn(p5, spec, s, {3});
    CHECK(hidden_of(ok)->state.snapshot == VertexSet(5, {4}));
}

TEST_CASE("robber turn")
{
    auto p5 = named("path:5");
    auto spec = GameSpec::make(p5, Variant::Capture, 1, 1);
    BeliefState s{{1}, Phase::Invisible, VertexSet(5, {4}), -1, std::nullopt, true};
    auto bs = robber_turn(p5, spec, s);
    CHECK(seen_of(bs).empty());
    CHECK(hidden_of(bs)->state.territory.members() == std::vector<Vertex>{3, 4});

    // The robber escapes sight on C4 by standing still.
    auto c4 = named("cycle:4");
    BeliefState v{{0}, Phase::Visible, VertexSet(4), 2, std::nullopt, true};
    bs = robber_turn(c4, GameSpec::make(c4, Variant::Capture, 1, 1), v);
    CHECK(seen_of(bs) == std::vector<Vertex>{1, 3});
    CHECK(hidden_of(bs)->state.territory.members() == std::vector<Vertex>{2});

    auto p3 = named("path:3");
    auto ds = GameSpec::make(p3, Variant::TimeDelayed, 1, 1);
    BeliefState d{{0}, Phase::Delayed, VertexSet(3, {1, 2}), -1, std::nullopt, false};
    auto after = cop_turn(p3, ds, d, {1});
    REQUIRE(after.branches.size() == 2);
    CHECK(after.branches[0].tag == BranchTag::Captured);
    auto rb = robber_turn(p3, ds, after.branches[1].state);
    REQUIRE(rb.branches.size() == 1);
    CHECK(rb.branches[0].state.territory.members() == std::vector<Vertex>{2});
    CHECK(rb.branches[0].origin == 2);

    CHECK_THROWS_AS(robber_turn(p5, spec, BeliefState{{1}, Phase::Invisible, VertexSet(5, {4}), -1, {}, false}),
                    MoveError);
}

TEST_CASE("script simulation")
{
    auto p5 = named("path:5");
    auto spec = GameSpec::make(p5, Variant::See, 1, 1);
    auto rep = simulate_script(p5, spec, Script{{{0, 1, 2, 3, 4}}});
    REQUIRE(rep.seen_guaranteed_at);
    CHECK(rep.monotone);
    CHECK(rep.cleaned_at == rep.seen_guaranteed_at);

    auto k3 = named("complete:3");
    auto all = simulate_script(k3, GameSpec::make(k3, Variant::See, 0, 3), Script{{{0}, {1}, {2}}});
    CHECK(all.seen_guaranteed_at == 0);

    CHECK_THROWS_AS(simulate_script(p5, spec, Script{{{0, 2}}}), MoveError);
    CHECK_THROWS_AS(simulate_script(p5, spec, Script{{{0, 1}, {0}}}), MoveError);
}

TEST_CASE("one cop sees but never cleans C4")
{
    // Exhaustive over walks of length <= 8 from every start.
    auto c4 = named("cycle:4");
    auto spec = GameSpec::make(c4, Variant::See, 1, 1);
    int checked = 0, seeing = 0;
    std::vector<Vertex> walk;
    std::function<void(int)> extend = [&](int len) {
        auto rep = simulate_script(c4, spec, Script{{walk}});
        CHECK_FALSE(rep.cleaned_at);
        if (rep.seen_guaranteed_at) ++seeing;
        ++checked;
        if (len == 8) return;
        for (Vertex w : c4.closed_neighborhood(walk.back()).members()) {
            walk.push_back(w);
            extend(len + 1);
            walk.pop_back();
        }
    };
    for (Vertex s = 0; s < 4; ++s) {
        walk = {s};
        extend(1);
    }
    CHECK(checked > 1000);
    CHECK(seeing > 0);
    CHECK(simulate_script(c4, spec, Script{{{0, 1}}}).seen_guaranteed_at == 1);
}

TEST_CASE("matches")
{
    auto p2 = named("path:2");
    RandomCops cops(1);
    RandomRobber robber(2);
    struct Sit : CopPolicy {
        std::vector<Vertex> place(const Graph&, const GameSpec&) override { return {0}; }
        std::vector<Vertex> move(const Graph& g, const GameSpec&, const BeliefState& s, int) override
        {
            if (s.phase == Phase::Visible) return {s.robber};
            return {g.neighbors(s.cops[0]).front()};
        }
    } greedy;
    auto tr = play_match(p2, GameSpec::make(p2, Variant::Capture, 1, 1), greedy, robber, 10);
    CHECK(tr.outcome == MatchOutcome::Captured);
    CHECK(tr.rounds == 1);

    auto k5 = named("complete:5");
    tr = play_match(k5, GameSpec::make(k5, Variant::Capture, 1, 1), greedy, robber, 10);
    CHECK(tr.outcome == MatchOutcome::Captured);
    CHECK(tr.rounds <= 2);
}

TEST_CASE("branch soundness under random play")
{
    const char* recipes[] = {"cycle:6", "randconnected:n=8,seed=3", "petersen", "randtree:n=9,seed=4"};
    const Variant variants[] = {Variant::See, Variant::Capture, Variant::MonotoneCapture, Variant::TimeDelayed};
    std::uint64_t seed = 0;
    for (const char* r : recipes) {
        auto g = named(r);
        for (Variant v : variants)
            for (int ell = 0; ell <= 2; ++ell)
                for (int trial = 0; trial < 20; ++trial) {
                    RandomCops cops(++seed);
                    RandomRobber robber(++seed * 7);
                    auto spec = GameSpec::make(g, v, ell, 2);
                    try {
                        auto tr = play_match(g, spec, cops, robber, 30);
                        CHECK(tr.rounds <= 30);
                    } catch (const MonotonicityError&) {
                        // Random cops may break the monotone rule; that is the referee working.
                    }
                }
    }
}
