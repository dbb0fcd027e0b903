#include <algorithm>
#include <random>

#include "copvis/families.hpp"
#include "copvis/strategies.hpp"
#include "doctest.h"

using namespace copvis;

namespace {

Family fam(const std::string& r) { return generate(parse_recipe(r)); }

struct RandomRobber : RobberPolicy {
    std::mt19937_64 rng;
    explicit RandomRobber(std::uint64_t seed) : rng(seed) {}
    Vertex pick(const Graph& g, std::span<const Vertex> cops, Vertex r, bool stay)
    {
        std::vector<Vertex> opts;
        if (stay) opts.push_back(r);
        for (Vertex u : g.neighbors(r))
            if (std::find(cops.begin(), cops.end(), u) == cops.end()) opts.push_back(u);
        return opts[rng() % opts.size()];
    }
    Vertex place(const Graph& g, const GameSpec&, std::span<const Vertex> cops) override
    {
        std::vector<Vertex> free;
        for (Vertex v = 0; v < g.order(); ++v)
            if (std::find(cops.begin(), cops.end(), v) == cops.end()) free.push_back(v);
        return free[rng() % free.size()];
    }
    Vertex move(const Graph& g, const GameSpec&, const BeliefState& s, Vertex r, int) override
    {
        return pick(g, s.cops, r, true);
    }
};

// Records every input and output of a cop policy.
struct Recorder : CopPolicy {
    CopPolicy& inner;
    std::vector<std::pair<bool, BeliefState>> inputs;  // (is move, state)
    std::vector<std::vector<Vertex>> outputs;
    explicit Recorder(CopPolicy& p) : inner(p) {}
    std::vector<Vertex> place(const Graph& g, const GameSpec& spec) override
    {
        outputs.push_back(inner.place(g, spec));
        return outputs.back();
    }
    std::vector<Vertex> move(const Graph& g, const GameSpec& spec, const BeliefState& s, int round) override
    {
        inputs.push_back({true, s});
        outputs.push_back(inner.move(g, spec, s, round));
        return outputs.back();
    }
    void observe(const Graph& g, const GameSpec& spec, const BeliefState& s, int round) override
    {
        inputs.push_back({false, s});
        inner.observe(g, spec, s, round);
    }
};

// Feeds the recorded observations to a fresh policy; its decisions must match.
bool replay(const Graph& g, const GameSpec& spec, CopPolicy& fresh, const Recorder& rec, bool placed)
{
    std::size_t out = 0;
    if (placed && fresh.place(g, spec) != rec.outputs[out++]) return false;
    int round = 0;
    for (const auto& [is_move, s] : rec.inputs) {
        if (!is_move) {
            fresh.observe(g, spec, s, round);
            continue;
        }
        if (fresh.move(g, spec, s, ++round) != rec.outputs[out++]) return false;
    }
    return out == rec.outputs.size();
}

}  // namespace

TEST_CASE("chordal pursuit on paths and cliques")
{
    auto p = fam("path:7").graph;
    auto peo = *chordal_peo(p);
    auto spec = GameSpec::make(p, Variant::Capture, 1, 1);
    for (Vertex s = 0; s + 1 < 7; ++s) {
        ChordalPursuit cop(p, peo, s, s + 1, 1);
        RandomRobber rob(s);
        auto tr = play_match(p, spec, cop, rob, 50, MatchStart{{s}, s + 1, true});
        CHECK(tr.outcome == MatchOutcome::Captured);
    }
    // The robber is pushed to the far end.
    auto spec2 = GameSpec::make(p, Variant::Capture, 2, 1);
    ChordalPursuit cop(p, peo, 1, 3, 2);
    auto solved = solve(p, spec2, {}, BeliefState{{1}, Phase::Visible, {}, 3, std::nullopt, false});
    SolverRobber best(solved);
    auto tr = play_match(p, spec2, cop, best, 50, MatchStart{{1}, 3, true});
    REQUIRE(tr.outcome == MatchOutcome::Captured);
    CHECK(tr.log.back().robber == 6);

    auto k5 = fam("complete:5").graph;
    ChordalPursuit kc(k5, *chordal_peo(k5), 0, 3, 1);
    RandomRobber rob(9);
    tr = play_match(k5, GameSpec::make(k5, Variant::Capture, 1, 1), kc, rob, 5, MatchStart{{0}, 3, true});
    CHECK(tr.outcome == MatchOutcome::Captured);
    CHECK(tr.rounds == 1);

    CHECK_THROWS_AS(ChordalPursuit(p, peo, 0, 3, 1), GraphError);
    auto c4 = fam("cycle:4").graph;
    EliminationOrdering fake{{0, 1, 2, 3}, OrderingKind::Simplicial, {}};
    CHECK_THROWS_AS(ChordalPursuit(c4, fake, 0, 1, 1), GraphError);
}

TEST_CASE("chordal pursuit captures and keeps its distance")
{
    int matches = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int ell = 1 + seed % 3;
        auto g = fam("randchordal:n=" + std::to_string(8 + seed % 6) + ",seed=" + std::to_string(seed)).graph;
        auto peo = *chordal_peo(g);
        auto pos = peo.positions();
        auto spec = GameSpec::make(g, Variant::Capture, ell, 1);
        for (Vertex s = 0; s < g.order(); ++s)
            for (Vertex f = 0; f < g.order(); f += 2) {
                if (s == f || g.dist(s, f) > ell) continue;
                auto solved = solve(g, spec, {}, BeliefState{{s}, Phase::Visible, {}, f, std::nullopt, false});
                SolverRobber best(solved);
                RandomRobber rnd(seed * 97 + s);
                for (RobberPolicy* rob : {static_cast<RobberPolicy*>(&best), static_cast<RobberPolicy*>(&rnd)}) {
                    ChordalPursuit cop(g, peo, s, f, ell);
                    Recorder rec(cop);
                    auto tr = play_match(g, spec, rec, *rob, 100, MatchStart{{s}, f, true});
                    REQUIRE(tr.outcome == MatchOutcome::Captured);
                    ++matches;
                    ChordalPursuit again(g, peo, s, f, ell);
                    CHECK(replay(g, spec, again, rec, false));

                    // d[j]: cop after its move in round j+1 to the robber's vertex before that round's robber move.
                    std::vector<Vertex> r{f};
                    std::vector<int> d;
                    for (const auto& e : tr.log) {
                        d.push_back(g.dist(e.cops.front(), r.back()));
                        r.push_back(e.robber);
                    }
                    for (std::size_t j = 1; j < d.size(); ++j) CHECK(d[j] <= d[j - 1]);
                    // Index peak (earliest-eliminated vertex between two later ones).
                    for (std::size_t t = 1; t + 1 < r.size() && t + 1 < d.size(); ++t)
                        if (r[t] != r[t - 1] && r[t] != r[t + 1] && pos[r[t]] < pos[r[t - 1]] &&
                            pos[r[t]] < pos[r[t + 1]])
                            CHECK(d[t + 1] < d[t]);
                }
            }
    }
    CHECK(matches > 500);
}

TEST_CASE("chordal pursuit at distance two against the optimal robber")
{
    int tried = 0;
    for (std::uint64_t seed = 0; seed < 30 && tried < 10; ++seed) {
        auto g = fam("randchordal:n=10,seed=" + std::to_string(seed)).graph;
        auto spec = GameSpec::make(g, Variant::Capture, 2, 1);
        for (Vertex s = 0; s < 10; ++s)
            for (Vertex f = 0; f < 10; ++f) {
                if (g.dist(s, f) != 2) continue;
                auto solved = solve(g, spec, {}, BeliefState{{s}, Phase::Visible, {}, f, std::nullopt, false});
                CHECK(solved.winner() == Winner::Cops);
                ChordalPursuit cop(g, *chordal_peo(g), s, f, 2);
                SolverRobber best(solved);
                auto tr = play_match(g, spec, cop, best, 100, MatchStart{{s}, f, true});
                CHECK(tr.outcome == MatchOutcome::Captured);
                ++tried;
                s = f = 10;
            }
    }
    CHECK(tried == 10);
}

TEST_CASE("shadow capture")
{
    auto c6 = fam("cycle:6").graph;
    ShadowCapture cops(c6, 2);
    CHECK(cops.see_number() == 1);
    CHECK(cops.classical_number() == 2);
    CHECK(cops.cops() == 3);
    auto spec = GameSpec::make(c6, Variant::Capture, 2, 3);
    auto solved = solve(c6, spec);
    REQUIRE(solved.winner() == Winner::Cops);
    SolverRobber best(solved);
    auto tr = play_match(c6, spec, cops, best, 100);
    CHECK(tr.outcome == MatchOutcome::Captured);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomRobber rnd(seed);
        Recorder rec(cops);
        tr = play_match(c6, spec, rec, rnd, 100);
        CHECK(tr.outcome == MatchOutcome::Captured);
        ShadowCapture again(c6, 2);
        CHECK(replay(c6, spec, again, rec, true));
    }

    auto pet = fam("petersen").graph;
    ShadowCapture pc(pet, 2);
    CHECK(pc.classical_number() == 3);
    CHECK(pc.cops() == 4);
    auto pspec = GameSpec::make(pet, Variant::Capture, 2, pc.cops());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomRobber rnd(seed);
        CHECK(play_match(pet, pspec, pc, rnd, 200).outcome == MatchOutcome::Captured);
    }

    // Cop-win chordal graphs: c + 1 = 2 cops.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = fam("randchordal:n=9,seed=" + std::to_string(seed)).graph;
        ShadowCapture sc(g, 2);
        CHECK(sc.classical_number() == 1);
        auto gspec = GameSpec::make(g, Variant::Capture, 2, sc.cops());
        auto gs = solve(g, gspec);
        SolverRobber r(gs);
        CHECK(play_match(g, gspec, sc, r, 200).outcome == MatchOutcome::Captured);
    }
    CHECK_THROWS_AS(ShadowCapture(c6, 1), GraphError);
}
