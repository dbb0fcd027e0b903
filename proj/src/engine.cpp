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

#include "copvis/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace copvis {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::See: return "see";
    case Variant::Capture: return "capture";
    case Variant::MonotoneCapture: return "monotone";
    case Variant::TimeDelayed: return "delayed";
    case Variant::Classical: return "classical";
    case Variant::ZeroVis: return "zerovis";
    }
    return "?";
}

Variant parse_variant(std::string_view text)
{
    static const std::map<std::string_view, Variant> names{
        {"see", Variant::See},
        {"capture", Variant::Capture},
        {"monotone", Variant::MonotoneCapture},
        {"delayed", Variant::TimeDelayed},
        {"classical", Variant::Classical},
        {"zerovis", Variant::ZeroVis},
    };
    auto it = names.find(text);
    if (it == names.end()) throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
    return it->second;
}

std::string_view to_string(MatchOutcome o)
{
    switch (o) {
    case MatchOutcome::Captured: return "CAPTURED";
    case MatchOutcome::Seen: return "SEEN";
    case MatchOutcome::Timeout: return "TIMEOUT";
    }
    return "?";
}

GameSpec GameSpec::make(const Graph& g, Variant variant, int ell, int cops)
{
    if (cops < 1) throw std::invalid_argument("need at least one cop");
    if (ell < 0) throw std::invalid_argument("visibility radius must be >= 0");
    GameSpec s;
    s.requested = variant;
    s.variant = variant;
    s.ell = ell;
    s.cops = cops;
    if (variant == Variant::Classical) {
        s.variant = Variant::Capture;
        s.ell = g.order() == 0 ? 0 : metrics(g).diameter;
    } else if (variant == Variant::ZeroVis) {
        s.variant = Variant::Capture;
        s.ell = 0;
    }
    return s;
}

std::vector<Vertex> sorted_cops(std::vector<Vertex> cops)
{
    std::sort(cops.begin(), cops.end());
    return cops;
}

bool can_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to)
{
    if (from.size() != to.size()) return false;
    std::vector<bool> used(to.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
        if (i == from.size()) return true;
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (used[j] || g.dist(from[i], to[j]) > 1) continue;
            // Equal targets are interchangeable; try the first free copy only.
            if (j > 0 && to[j] == to[j - 1] && !used[j - 1]) continue;
            used[j] = true;
            if (assign(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return assign(0);
}

namespace {

void check_cops(const Graph& g, const GameSpec& spec, std::span<const Vertex> cops)
{
    if (static_cast<int>(cops.size()) != spec.cops)
        throw MoveError("expected " + std::to_string(spec.cops) + " cops, got " + std::to_string(cops.size()));
    for (Vertex c : cops)
        if (c < 0 || c >= g.order()) throw MoveError("cop vertex " + std::to_string(c) + " out of range");
}

bool terminal(const GameSpec& spec, const Branch& b)
{
    return b.tag == BranchTag::Captured || (b.tag == BranchTag::Seen && spec.seeing_wins());
}

BranchSet finish(const GameSpec& spec, std::vector<Branch> branches)
{
    BranchSet out;
    out.cop_win = std::all_of(branches.begin(), branches.end(), [&](const Branch& b) { return terminal(spec, b); });
    out.branches = std::move(branches);
    return out;
}

BeliefState visible(std::vector<Vertex> cops, Vertex r, bool robber_to_move)
{
    BeliefState s;
    s.cops = std::move(cops);
    s.phase = Phase::Visible;
    s.robber = r;
    s.robber_to_move = robber_to_move;
    return s;
}

BeliefState hidden(std::vector<Vertex> cops, Phase phase, VertexSet territory, bool robber_to_move)
{
    BeliefState s;
    s.cops = std::move(cops);
    s.phase = phase;
    s.territory = std::move(territory);
    s.robber_to_move = robber_to_move;
    return s;
}

// Splits robber positions into seen branches and one unseen branch.
void observe(const Graph& g, const GameSpec& spec, const std::vector<Vertex>& cops, const VertexSet& positions,
             bool robber_to_move, std::vector<Branch>& out, VertexSet& unseen)
{
    const VertexSet sight = g.closed_ball(cops, spec.ell);
    positions.for_each([&](Vertex v) {
        if (sight.contains(v)) out.push_back({BranchTag::Seen, visible(cops, v, robber_to_move), -1});
    });
    unseen = positions - sight;
}

}  // namespace

BranchSet initial_branches(const Graph& g, const GameSpec& spec, std::vector<Vertex> placement)
{
    check_cops(g, spec, placement);
    placement = sorted_cops(std::move(placement));
    const VertexSet choices = g.all() - VertexSet(g.order(), std::span<const Vertex>(placement));
    std::vector<Branch> out;
    if (choices.empty()) return finish(spec, std::move(out));
    if (spec.delayed()) {
        out.push_back({BranchTag::Hidden, hidden(placement, Phase::Delayed, choices, false), -1});
        return finish(spec, std::move(out));
    }
    VertexSet unseen;
    observe(g, spec, placement, choices, false, out, unseen);
    if (!unseen.empty()) {
        BeliefState s = hidden(placement, Phase::Invisible, unseen, false);
        if (spec.monotone()) s.snapshot = unseen;
        out.push_back({BranchTag::Hidden, std::move(s), -1});
    }
    return finish(spec, std::move(out));
}

BranchSet cop_turn(const Graph& g, const GameSpec& spec, const BeliefState& state, std::vector<Vertex> new_cops)
{
    if (state.robber_to_move) throw MoveError("cop_turn called on a robber-to-move state");
    check_cops(g, spec, new_cops);
    new_cops = sorted_cops(std::move(new_cops));
    if (!can_move(g, state.cops, new_cops)) throw MoveError("illegal cop step");
    const VertexSet occupied(g.order(), std::span<const Vertex>(new_cops));
    std::vector<Branch> out;

    auto captured = [&](const VertexSet& positions) {
        (positions & occupied).for_each([&](Vertex v) {
            out.push_back({BranchTag::Captured, visible(new_cops, v, true), state.phase == Phase::Delayed ? v : -1});
        });
    };

    switch (state.phase) {
    case Phase::Visible:
        if (occupied.contains(state.robber))
            out.push_back({BranchTag::Captured, visible(new_cops, state.robber, true), -1});
        else
            out.push_back({BranchTag::Seen, visible(new_cops, state.robber, true), -1});
        break;
    case Phase::Invisible: {
        captured(state.territory);
        VertexSet unseen;
        observe(g, spec, new_cops, state.territory - occupied, true, out, unseen);
        if (!unseen.empty()) {
            BeliefState s = hidden(new_cops, Phase::Invisible, unseen, true);
            if (spec.monotone()) {
                if (state.snapshot && !unseen.subset_of(*state.snapshot))
                    throw MonotonicityError("cop move lets the unseen territory grow");
                s.snapshot = unseen;
            }
            out.push_back({BranchTag::Hidden, std::move(s), -1});
        }
        break;
    }
    case Phase::Delayed: {
        captured(state.territory);
        VertexSet survivors = state.territory - occupied;
        if (!survivors.empty())
            out.push_back({BranchTag::Hidden, hidden(new_cops, Phase::Delayed, std::move(survivors), true), -1});
        break;
    }
    }
    return finish(spec, std::move(out));
}

BranchSet robber_turn(const Graph& g, const GameSpec& spec, const BeliefState& state)
{
    if (!state.robber_to_move) throw MoveError("robber_turn called on a cop-to-move state");
    const VertexSet occupied(g.order(), std::span<const Vertex>(state.cops));
    std::vector<Branch> out;

    switch (state.phase) {
    case Phase::Visible:
    case Phase::Invisible: {
        VertexSet moves(g.order());
        if (state.phase == Phase::Visible)
            moves = g.closed_neighborhood(state.robber);
        else
            state.territory.for_each([&](Vertex v) { moves |= g.closed_neighborhood(v); });
        moves -= occupied;
        VertexSet unseen;
        observe(g, spec, state.cops, moves, false, out, unseen);
        if (!unseen.empty()) {
            BeliefState s = hidden(state.cops, Phase::Invisible, unseen, false);
            if (spec.monotone()) s.snapshot = state.phase == Phase::Invisible ? *state.snapshot : g.all();
            out.push_back({BranchTag::Hidden, std::move(s), -1});
        }
        if (out.empty()) out.push_back({BranchTag::Captured, state, -1});
        break;
    }
    case Phase::Delayed:
        state.territory.for_each([&](Vertex v) {
            VertexSet moves = g.closed_neighborhood(v) - occupied;
            if (moves.empty())
                out.push_back({BranchTag::Captured, visible(state.cops, v, false), v});
            else
                out.push_back({BranchTag::Hidden, hidden(state.cops, Phase::Delayed, std::move(moves), false), v});
        });
        break;
    }
    return finish(spec, std::move(out));
}

std::vector<Vertex> Script::at(int round) const
{
    std::vector<Vertex> out;
    for (const auto& w : walks) out.push_back(w.at(round));
    return out;
}

void validate_script(const Graph& g, const Script& script)
{
    if (script.walks.empty()) throw MoveError("script has no walks");
    const std::size_t len = script.walks.front().size();
    if (len == 0) throw MoveError("script walks are empty");
    for (std::size_t i = 0; i < script.walks.size(); ++i) {
        const auto& w = script.walks[i];
        if (w.size() != len) throw MoveError("script walks differ in length");
        for (std::size_t t = 0; t < len; ++t) {
            if (w[t] < 0 || w[t] >= g.order())
                throw MoveError("walk " + std::to_string(i) + " leaves the graph at round " + std::to_string(t));
            if (t > 0 && g.dist(w[t - 1], w[t]) > 1)
                throw MoveError("walk " + std::to_string(i) + " jumps at round " + std::to_string(t));
        }
    }
}

CleaningReport simulate_script(const Graph& g, const GameSpec& spec, const Script& script)
{
    if (spec.delayed()) throw std::invalid_argument("scripts are not defined for the delayed variant");
    validate_script(g, script);
    GameSpec rules = spec;
    rules.variant = Variant::See;
    rules.cops = script.cops();
    if (script.cops() != spec.cops) throw MoveError("script cop count differs from the game");

    CleaningReport rep;
    auto record = [&](const BranchSet& bs, std::vector<Vertex>& seen, VertexSet& territory) {
        territory = VertexSet(g.order());
        for (const auto& b : bs.branches) {
            if (b.tag == BranchTag::Hidden)
                territory = b.state.territory;
            else
                seen.push_back(b.state.robber);
        }
    };

    std::vector<Vertex> seen;
    VertexSet territory;
    record(initial_branches(g, rules, script.at(0)), seen, territory);
    rep.territory.push_back(territory);
    rep.seen.push_back(seen);

    for (int t = 1; t < script.rounds(); ++t) {
        seen.clear();
        VertexSet after_cops(g.order());
        if (!territory.empty()) {
            BeliefState s = hidden(sorted_cops(script.at(t - 1)), Phase::Invisible, territory, false);
            record(cop_turn(g, rules, s, script.at(t)), seen, after_cops);
        }
        rep.territory.push_back(after_cops);
        territory = VertexSet(g.order());
        if (!after_cops.empty()) {
            BeliefState s = hidden(sorted_cops(script.at(t)), Phase::Invisible, after_cops, true);
            record(robber_turn(g, rules, s), seen, territory);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        rep.seen.push_back(seen);
    }

    for (std::size_t t = 0; t < rep.territory.size(); ++t) {
        const VertexSet& now = rep.territory[t];
        const int round = static_cast<int>(t);
        if (now.empty() && !rep.seen_guaranteed_at) rep.seen_guaranteed_at = round;
        if (now.size() == 1) rep.located.push_back({now.members().front(), round});
        if (t == 0) continue;
        (now - rep.territory[t - 1]).for_each([&](Vertex v) {
            rep.monotone = false;
            rep.recontaminations.push_back({v, round});
        });
    }
    // A guaranteed sighting only amounts to a capture where seeing and
    // capturing coincide: zero visibility, or chordal graphs.
    if (rep.seen_guaranteed_at && (spec.ell == 0 || (g.connected() && chordal_peo(g))))
        rep.cleaned_at = rep.seen_guaranteed_at;
    return rep;
}

Trace play_match(const Graph& g, const GameSpec& spec, CopPolicy& cops, RobberPolicy& robber, int max_rounds,
                 const std::optional<MatchStart>& start)
{
    Trace tr;
    BeliefState state;
    Vertex r = -1;

    // Exactly one branch may be consistent with the true robber position.
    auto select = [&](const BranchSet& bs, auto&& consistent) -> Branch {
        const Branch* hit = nullptr;
        int count = 0;
        for (const auto& b : bs.branches)
            if (consistent(b)) {
                hit = &b;
                ++count;
            }
        if (count != 1)
            throw std::logic_error("robber position lies in " + std::to_string(count) + " branches");
        return *hit;
    };
    auto holds = [&](Vertex v) {
        return [&, v](const Branch& b) {
            if (b.tag == BranchTag::Hidden) return b.state.territory.contains(v);
            return b.state.robber == v;
        };
    };
    auto ends = [&](const Branch& b, int round) {
        if (b.tag == BranchTag::Captured) tr.outcome = MatchOutcome::Captured;
        else if (b.tag == BranchTag::Seen && spec.seeing_wins()) tr.outcome = MatchOutcome::Seen;
        else return false;
        tr.rounds = round;
        return true;
    };

    if (start) {
        check_cops(g, spec, start->cops);
        if (start->robber < 0 || start->robber >= g.order()) throw MoveError("robber start out of range");
        state = visible(sorted_cops(start->cops), start->robber, !start->cops_to_move);
        if (std::binary_search(state.cops.begin(), state.cops.end(), start->robber))
            throw MoveError("robber starts on a cop");
        r = start->robber;
    } else {
        auto placement = cops.place(g, spec);
        BranchSet bs = initial_branches(g, spec, placement);
        placement = sorted_cops(std::move(placement));
        if (bs.branches.empty()) {
            tr.outcome = MatchOutcome::Captured;
            tr.log.push_back({0, placement, -1, {}});
            return tr;
        }
        r = robber.place(g, spec, placement);
        if (r < 0 || r >= g.order() || std::binary_search(placement.begin(), placement.end(), r))
            throw MoveError("illegal robber placement");
        Branch b = select(bs, holds(r));
        tr.log.push_back({0, placement, r, b.state});
        if (ends(b, 0)) return tr;
        state = b.state;
        cops.observe(g, spec, state, 0);
    }

    for (int round = 1; round <= max_rounds; ++round) {
        if (!state.robber_to_move) {
            BranchSet bs = cop_turn(g, spec, state, cops.move(g, spec, state, round));
            Branch b = select(bs, holds(r));
            if (ends(b, round)) {
                tr.log.push_back({round, b.state.cops, r, b.state});
                return tr;
            }
            state = b.state;
            cops.observe(g, spec, state, round);
        }
        Vertex next = robber.move(g, spec, state, r, round);
        if (next < 0 || next >= g.order() || g.dist(r, next) > 1 ||
            std::binary_search(state.cops.begin(), state.cops.end(), next))
            throw MoveError("illegal robber move " + std::to_string(r) + " -> " + std::to_string(next));
        BranchSet bs = robber_turn(g, spec, state);
        Branch b = spec.delayed()
                       ? select(bs, [&](const Branch& c) { return c.origin == r && c.state.territory.contains(next); })
                       : select(bs, holds(next));
        r = next;
        tr.log.push_back({round, state.cops, r, b.state});
        if (ends(b, round)) return tr;
        state = b.state;
    }
    tr.outcome = MatchOutcome::Timeout;
    tr.rounds = max_rounds;
    return tr;
}

}  // namespace copvis
