/*
 * Copyright 2026 The copvis Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "copvis/strategies.hpp"

#include <algorithm>
#include <stdexcept>

#include "copvis/treerank.hpp"
#include "plan.hpp"

namespace copvis {

using detail::Rooted;
using detail::Seg;

namespace {

int cops_for_height(int h) { return std::max(1, (h + 2) / 3); }

Seg gather(const Graph& g, const std::vector<Vertex>& at, Vertex v)
{
    return detail::travel(g, at, std::vector<Vertex>(at.size(), v));
}

// Cleans the subtree below r with the cops standing at `at`.
Seg clean_height(const Rooted& t, Vertex r, const std::vector<Vertex>& at)
{
    const int k = static_cast<int>(at.size());
    Seg s = gather(t.g, at, r);
    if (cops_for_height(t.height[r]) == 1) {
        // Height at most three: sweep each child, stepping down to every
        // grandchild that still has children.
        std::vector<Vertex> walk{r};
        for (Vertex w : t.children[r]) {
            if (t.children[w].empty()) continue;
            walk.push_back(w);
            for (Vertex u : t.children[w]) {
                if (t.children[u].empty()) continue;
                walk.push_back(u);
                walk.push_back(w);
            }
            walk.push_back(r);
        }
        s.then(detail::follow(k, walk));
        return s;
    }
    for (Vertex x : t.children[r]) {
        s.then(gather(t.g, s.end(), x));
        for (Vertex p : t.children[x])
            for (Vertex y : t.children[p]) {
                auto now = s.end();
                if (now[0] != x) {
                    Seg back = detail::single({now[0], x});
                    back = detail::with(back, Seg(std::vector<Vertex>(now.begin() + 1, now.end())));
                    back.pad(1);
                    s.then(back);
                    now = s.end();
                }
                Seg team = clean_height(t, y, std::vector<Vertex>(now.begin() + 1, now.end()));
                s.then(detail::with(detail::vibrate(x, p, team.length()), team));
            }
    }
    return s;
}

Seg clean_member(const Graph& g, const RankCertificate& cert, int ell, const std::vector<Vertex>& at)
{
    if (cert.branches.empty()) return gather(g, at, cert.hub);
    Seg s(at);
    for (const auto& br : cert.branches) {
        const Vertex x = ell == 0 ? cert.hub : br.path[ell - 1];
        const Vertex y = br.path[ell];
        s.then(gather(g, s.end(), x));
        Seg team = clean_member(g, br.child, ell, std::vector<Vertex>(at.size() - 1, x));
        s.then(detail::with(detail::vibrate(x, y, team.length()), team));
    }
    return s;
}

}  // namespace

Script tree_one_visibility_script(const Graph& tree)
{
    if (!tree.is_tree()) throw GraphError("tree_one_visibility_script: not a tree");
    const Vertex root = metrics(tree).centre.front();
    Rooted t(tree, root);
    const int k = cops_for_height(t.height[root]);
    return clean_height(t, root, std::vector<Vertex>(k, root)).script();
}

Script t_family_script(const Graph& tree, const RankCertificate& cert)
{
    int ell = 0;
    if (!cert.branches.empty()) {
        const int len = static_cast<int>(cert.branches.front().path.size());
        if (len < 2 || len % 2) throw GraphError("t_family_script: branch paths must have even length >= 2");
        ell = (len - 2) / 2;
    }
    if (cert.rank < 1) throw GraphError("t_family_script: rank must be >= 1");
    return clean_member(tree, cert, ell, std::vector<Vertex>(cert.rank, cert.hub)).script();
}

Script t_family_script(const Family& family)
{
    if (!family.certificate) throw GraphError("t_family_script: family has no certificate");
    return t_family_script(family.graph, *family.certificate);
}

TEllScripts t_ell_scripts(const Graph& g, int ell)
{
    if (ell < 1) throw GraphError("t_ell_scripts: ell must be >= 1");
    FamilyRecipe recipe;
    recipe.kind = FamilyKind::SubdividedBinary;
    recipe.depth = 3;
    recipe.subdivisions = 2 * ell + 1;
    const Graph expected = generate(recipe).graph;
    if (g.order() != expected.order() || g.edges() != expected.edges())
        throw GraphError("t_ell_scripts: graph is not the depth-3 binary tree with 2*ell+1 subdivisions");

    // Vertex at distance d below the parent of original node c.
    auto leg = [&](int c, int d) {
        return d == 2 * ell + 2 ? Vertex{c} : subdivided_edge_path(3, recipe.subdivisions, c)[d - 1];
    };
    const Vertex a = 1, b = 4;
    auto walk = [&](std::vector<Vertex> waypoints) { return detail::route(g, waypoints); };
    // Walk from `from` to `hub`, then on along `rest` (which starts at hub).
    auto route_from = [&](Vertex from, Vertex hub, std::vector<Vertex> rest) {
        auto w = walk({from, hub});
        w.insert(w.end(), rest.begin() + 1, rest.end());
        return w;
    };
    // One cop vibrating at (x, y) while `team` runs.
    auto guarded = [&](Vertex from, Vertex x, Vertex y, Seg team) {
        Seg guard = detail::single(walk({from, x}));
        const int rest = std::max(0, team.length() - guard.length());
        guard.then(detail::vibrate(x, y, rest));
        return detail::with(guard, team);
    };

    const auto sweep = [&](Vertex hub, int left, int right) {
        return walk({hub, leg(left, ell + 2), hub, leg(right, ell + 2)});
    };

    // Two cops: the guard watches a (then 2) every second round from the
    // path towards b (then 6), so b may be recontaminated meanwhile.
    Seg two(std::vector<Vertex>{7, 8});
    two.then(gather(g, two.end(), a));
    two.then(guarded(a, leg(b, ell), leg(b, ell + 1), detail::single(route_from(a, b, sweep(b, 9, 10)))));
    two.then(gather(g, two.end(), 0));
    two.then(gather(g, two.end(), 2));
    two.then(guarded(2, leg(6, ell), leg(6, ell + 1), detail::single(route_from(2, 6, sweep(6, 13, 14)))));
    two.then(gather(g, two.end(), 5));
    two.then(detail::travel(g, two.end(), {leg(11, ell + 2), leg(12, ell + 2)}));

    // Three cops: the guard parks on the branching vertex, a second cop
    // holds the sub-branch vertex, the third sweeps its legs.
    Seg three(std::vector<Vertex>{7, 8, 7});
    three.then(gather(g, three.end(), a));
    auto hold = [&](Vertex guard_at, Vertex from, Vertex anchor, int left, int right) {
        Seg team = detail::with(detail::single(route_from(from, anchor, sweep(anchor, left, right))),
                                detail::single(walk({from, anchor})));
        return detail::with(detail::single({guard_at}), team);
    };
    three.then(hold(a, a, b, 9, 10));
    three.then(gather(g, three.end(), 0));
    three.then(gather(g, three.end(), 2));
    three.then(hold(2, 2, 6, 13, 14));
    {
        auto now = three.end();
        Seg team = detail::with(detail::single(route_from(now[1], 5, sweep(5, 11, 12))),
                                detail::single(walk({now[2], 5})));
        three.then(detail::with(detail::single({2}), team));
    }
    return {two.script(), three.script()};
}

namespace {

// Team of `at.size()` cops cleaning the subtree below s with a script from
// the SEE solver; extra cops shadow the first one.
Seg solved_subtree(const Rooted& t, Vertex s, int ell, const std::vector<Vertex>& at, int budget,
                   const SolveOptions& options)
{
    const auto members = t.subtree(s);
    const Graph sub = t.g.induced(members);
    const int need = tree_rank(sub, ell).rank;
    if (need > budget)
        throw GraphError("root_guarded_script: subtree at " + std::to_string(s) + " needs " + std::to_string(need) +
                         " cops, only " + std::to_string(budget) + " available");
    auto game = solve(sub, GameSpec::make(sub, Variant::See, ell, need), options);
    if (game.winner() == Winner::Inconclusive)
        throw std::runtime_error("root_guarded_script: inconclusive subtree solve");
    auto local = script_from_see_policy(game);
    if (!local) throw std::logic_error("root_guarded_script: subtree solve lost for the cops");

    std::vector<std::vector<Vertex>> walks;
    for (std::size_t c = 0; c < at.size(); ++c) {
        const auto& src = local->walks[std::min<std::size_t>(c, need - 1)];
        std::vector<Vertex> w;
        for (Vertex v : src) w.push_back(members[v]);
        walks.push_back(std::move(w));
    }
    std::vector<Vertex> first;
    for (const auto& w : walks) first.push_back(w.front());
    Seg seg = detail::travel(t.g, at, first);
    Seg body;
    body.w = std::move(walks);
    seg.then(body);
    return seg;
}

// Guard alternates between r and a child while the team cleans the
// subtrees `d` levels below r.
Seg occupy_clean(const Rooted& t, Vertex r, int d, int ell, const std::vector<Vertex>& at,
                 const SolveOptions& options)
{
    const int team_size = static_cast<int>(at.size()) - 1;
    Seg s = gather(t.g, at, r);
    for (Vertex x : t.children[r]) {
        auto targets = t.level(r, d);
        std::erase_if(targets, [&](Vertex v) {
            Vertex u = v;
            while (t.parent[u] != r) u = t.parent[u];
            return u != x;
        });
        if (targets.empty()) {
            auto now = s.end();
            Seg hop = detail::follow(1, {r, x, r});
            s.then(detail::with(hop, Seg(std::vector<Vertex>(now.begin() + 1, now.end()))));
            continue;
        }
        if (team_size == 0)
            throw GraphError("root_guarded_script: subtrees below " + std::to_string(x) + " need cops, none left");
        for (Vertex y : targets) {
            auto now = s.end();
            if (now[0] != r) {
                Seg back = detail::with(detail::single({now[0], r}), Seg(std::vector<Vertex>(now.begin() + 1, now.end())));
                back.pad(1);
                s.then(back);
                now = s.end();
            }
            Seg team = solved_subtree(t, y, ell, std::vector<Vertex>(now.begin() + 1, now.end()), team_size, options);
            s.then(detail::with(detail::vibrate(r, x, team.length()), team));
        }
    }
    auto now = s.end();
    if (now[0] != r) {
        Seg back = detail::with(detail::single({now[0], r}), Seg(std::vector<Vertex>(now.begin() + 1, now.end())));
        back.pad(1);
        s.then(back);
    }
    return s;
}

}  // namespace

Script root_guarded_script(const Graph& tree, Vertex root, int k, int ell, int i, GuardMode mode,
                           const SolveOptions& options)
{
    if (!tree.is_tree()) throw GraphError("root_guarded_script: not a tree");
    if (root < 0 || root >= tree.order()) throw GraphError("root_guarded_script: root out of range");
    if (k < 2) throw GraphError("root_guarded_script: k must be >= 2");
    if (ell < 0 || i < 1) throw GraphError("root_guarded_script: need ell >= 0 and i >= 1");
    Rooted t(tree, root);
    const std::vector<Vertex> start(k - 1, root);

    if (mode == GuardMode::Occupy || i / 2 == 0) {
        if (i > 2 * ell + 2) throw GraphError("root_guarded_script: i must be at most 2*ell+2");
        return occupy_clean(t, root, (i + 1) / 2, ell, start, options).script();
    }
    if (i >= 2 * ell + 2) throw GraphError("root_guarded_script: i must be below 2*ell+2");
    const int e = i / 2;
    // Vertices e levels down, plus shallower leaves so nothing is skipped.
    std::vector<Vertex> hubs;
    for (Vertex v : t.subtree(root))
        if (t.depth[v] == e || (t.depth[v] < e && t.depth[v] > 0 && t.children[v].empty())) hubs.push_back(v);
    Seg s(start);
    for (Vertex h : hubs) s.then(occupy_clean(t, h, (i + 1) / 2, ell, s.end(), options));
    return s.script();
}

bool root_guarded(const Graph& g, const Script& script, Vertex root, int ell, GuardMode mode)
{
    auto guarded = [&](int round) {
        for (Vertex c : script.at(round))
            if (mode == GuardMode::Occupy ? c == root : g.dist(c, root) <= ell) return true;
        return false;
    };
    for (int t = 1; t < script.rounds(); ++t)
        if (!guarded(t) && !guarded(t - 1)) return false;
    return true;
}

std::optional<Script> script_from_see_policy(const SolvedGame& game)
{
    if (game.winner() != Winner::Cops || !game.spec().seeing_wins()) return std::nullopt;
    const Graph& g = game.graph();
    const GameSpec& spec = game.spec();
    auto hidden = [](const BranchSet& bs) -> std::optional<BeliefState> {
        for (const auto& b : bs.branches)
            if (b.tag == BranchTag::Hidden) return b.state;
        return std::nullopt;
    };

    auto placement = *game.placement();
    Script script;
    for (Vertex v : placement) script.walks.push_back({v});
    auto state = hidden(initial_branches(g, spec, placement));
    const int limit = game.stats().rounds.value_or(0) + 1;
    for (int round = 1; state && round <= limit; ++round) {
        auto action = game.cop_action(*state);
        if (!action) throw std::logic_error("script_from_see_policy: no action on the hidden path");
        auto moved = detail::assign(g, script.at(round - 1), *action);
        for (int c = 0; c < script.cops(); ++c) script.walks[c].push_back(moved[c]);
        state = hidden(cop_turn(g, spec, *state, *action));
        if (state) state = hidden(robber_turn(g, spec, *state));
    }
    if (state) throw std::logic_error("script_from_see_policy: hidden path outlived the solved bound");
    return script;
}

}  // namespace copvis
