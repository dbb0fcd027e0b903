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

// Straightforward solver built only on the engine's transition functions:
// explicit state map, every cop multiset filtered by can_move, and value
// iteration until nothing changes.

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "copvis/solver.hpp"

namespace copvis {

namespace {

constexpr int kUnknown = std::numeric_limits<int>::max();

struct Node {
    BeliefState state;
    // Cop node: per action, the successor ids (terminal branches dropped).
    std::vector<std::vector<int>> actions;
    // Robber node: successor ids.
    std::vector<int> next;
    int value = kUnknown;
};

void multisets(int n, int k, std::vector<Vertex>& cur, std::vector<std::vector<Vertex>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (Vertex v = cur.empty() ? 0 : cur.back(); v < n; ++v) {
        cur.push_back(v);
        multisets(n, k, cur, out);
        cur.pop_back();
    }
}

bool terminal(const GameSpec& spec, const Branch& b)
{
    return b.tag == BranchTag::Captured || (b.tag == BranchTag::Seen && spec.seeing_wins());
}

}  // namespace

ReferenceResult solve_reference(const Graph& g, const GameSpec& spec, std::size_t max_states)
{
    ReferenceResult res;
    std::vector<std::vector<Vertex>> all;
    std::vector<Vertex> cur;
    multisets(g.order(), spec.cops, cur, all);

    std::map<std::string, int> index;
    std::vector<Node> nodes;
    std::deque<int> todo;
    auto id_of = [&](const BeliefState& s) {
        auto [it, fresh] = index.emplace(encode(s), static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back({s, {}, {}, kUnknown});
            todo.push_back(it->second);
        }
        return it->second;
    };

    std::vector<std::vector<int>> placements;
    for (const auto& p : all) {
        std::vector<int> ids;
        for (const auto& b : initial_branches(g, spec, p).branches)
            if (!terminal(spec, b)) ids.push_back(id_of(b.state));
        placements.push_back(std::move(ids));
    }

    while (!todo.empty()) {
        if (nodes.size() > max_states) {
            res.states = nodes.size();
            return res;
        }
        const int id = todo.front();
        todo.pop_front();
        const BeliefState s = nodes[id].state;
        if (!s.robber_to_move) {
            std::vector<std::vector<int>> acts;
            for (const auto& c : all) {
                if (!can_move(g, s.cops, c)) continue;
                BranchSet bs;
                try {
                    bs = cop_turn(g, spec, s, c);
                } catch (const MonotonicityError&) {
                    continue;
                }
                std::vector<int> ids;
                for (const auto& b : bs.branches)
                    if (!terminal(spec, b)) ids.push_back(id_of(b.state));
                acts.push_back(std::move(ids));
            }
            nodes[id].actions = std::move(acts);
        } else {
            std::vector<int> ids;
            for (const auto& b : robber_turn(g, spec, s).branches)
                if (!terminal(spec, b)) ids.push_back(id_of(b.state));
            nodes[id].next = std::move(ids);
        }
    }
    res.states = nodes.size();

    auto worst = [&](const std::vector<int>& ids) {
        int v = 0;
        for (int i : ids) v = std::max(v, nodes[i].value);
        return v;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& n : nodes) {
            int v = kUnknown;
            if (!n.state.robber_to_move) {
                for (const auto& a : n.actions) {
                    int w = worst(a);
                    if (w != kUnknown) v = std::min(v, w + 1);
                }
            } else {
                v = worst(n.next);
            }
            if (v < n.value) {
                n.value = v;
                changed = true;
            }
        }
    }
    int best = kUnknown;
    for (const auto& ids : placements) best = std::min(best, worst(ids));
    res.winner = best == kUnknown ? Winner::Robber : Winner::Cops;
    if (best != kUnknown) res.rounds = best;
    return res;
}

}  // namespace copvis
