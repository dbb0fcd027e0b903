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

#include <algorithm>
#include <stdexcept>

#include "copvis/strategies.hpp"
#include "plan.hpp"

namespace copvis {

ChordalPursuit::ChordalPursuit(const Graph& g, const EliminationOrdering& order, Vertex start, Vertex first_sight,
                               int ell)
    : start_(start), previous_(-1)
{
    if (!is_simplicial_ordering(g, order.order)) throw GraphError("chordal_pursuit: not a simplicial ordering");
    if (start < 0 || start >= g.order() || first_sight < 0 || first_sight >= g.order())
        throw GraphError("chordal_pursuit: vertex out of range");
    if (g.dist(start, first_sight) > ell) throw GraphError("chordal_pursuit: robber not in sight of the cop");
    pos_ = order.positions();
}

std::vector<Vertex> ChordalPursuit::place(const Graph&, const GameSpec&) { return {start_}; }

std::vector<Vertex> ChordalPursuit::move(const Graph& g, const GameSpec&, const BeliefState& state, int)
{
    if (state.phase != Phase::Visible) throw std::logic_error("chordal_pursuit: robber out of sight");
    const Vertex cop = state.cops.front();
    const Vertex robber = state.robber;
    // Aim at where the robber stood before its last move.
    target_ = previous_ >= 0 ? previous_ : robber;
    previous_ = robber;
    if (g.dist(cop, robber) <= 1) {
        target_ = robber;
        return {robber};
    }
    // Lowest elimination index first: the vertex removed last has index 1.
    const int d = g.dist(cop, target_);
    Vertex best = cop;
    for (Vertex u : g.neighbors(cop))
        if (g.dist(u, target_) == d - 1 && (best == cop || pos_[u] > pos_[best])) best = u;
    return {best};
}

ShadowCapture::ShadowCapture(const Graph& g, int ell, const SolveOptions& options)
{
    if (ell < 2) throw GraphError("shadow_capture: needs ell >= 2");
    auto number = [&](Variant v, int l) {
        auto k = cop_number(g, v, l, options);
        if (!k) throw std::runtime_error("shadow_capture: inconclusive cop number");
        return *k;
    };
    classical_ = number(Variant::Classical, 0);
    see_ = number(Variant::See, ell);
    m_ = std::max(see_, classical_ + 1);
    see_game_ = solve(g, GameSpec::make(g, Variant::See, ell, m_), options);
    classical_game_ = solve(g, GameSpec::make(g, Variant::Classical, 0, m_ - 1), options);
    if (see_game_.winner() != Winner::Cops || classical_game_.winner() != Winner::Cops)
        throw std::runtime_error("shadow_capture: solve did not give the cops a win");
}

void ShadowCapture::reset()
{
    stage_ = Stage::Search;
    mine_.clear();
    mid_seen_ = -1;
    leader_ = -1;
}

std::vector<Vertex> ShadowCapture::place(const Graph&, const GameSpec&)
{
    reset();
    mine_ = *see_game_.placement();
    return mine_;
}

void ShadowCapture::observe(const Graph&, const GameSpec&, const BeliefState& state, int)
{
    mid_seen_ = state.phase == Phase::Visible ? state.robber : -1;
}

std::vector<Vertex> ShadowCapture::classical_move(std::vector<Vertex> team, Vertex robber) const
{
    BeliefState s;
    s.cops = sorted_cops(team);
    s.phase = Phase::Visible;
    s.robber = robber;
    auto action = classical_game_.cop_action(s);
    if (!action) throw std::logic_error("shadow_capture: classical policy has no move");
    return detail::assign(classical_game_.graph(), team, *action);
}

std::vector<Vertex> ShadowCapture::move(const Graph& g, const GameSpec&, const BeliefState& state, int)
{
    if (sorted_cops(mine_) != state.cops) throw std::logic_error("shadow_capture: positions out of step");
    const Vertex robber = state.phase == Phase::Visible ? state.robber : -1;
    // Robber vertex one round back, or the current one at first sight.
    const Vertex shadow = mid_seen_ >= 0 ? mid_seen_ : robber;
    mid_seen_ = -1;

    if (stage_ == Stage::Search) {
        if (shadow < 0) {
            auto action = see_game_.cop_action(state);
            if (!action) throw std::logic_error("shadow_capture: search policy has no move");
            mine_ = detail::assign(g, mine_, *action);
            return mine_;
        }
        stage_ = Stage::Track;
        leader_ = 0;
        for (int c = 1; c < m_; ++c)
            if (g.dist(mine_[c], shadow) < g.dist(mine_[leader_], shadow)) leader_ = c;
    }
    if (shadow < 0) throw std::logic_error("shadow_capture: lost the shadow");

    std::vector<int> others;
    for (int c = 0; c < m_; ++c)
        if (c != leader_) others.push_back(c);
    std::vector<Vertex> team;
    for (int c : others) team.push_back(mine_[c]);

    std::vector<Vertex> next = mine_;
    if (stage_ == Stage::Track) {
        auto path = detail::geodesic(g, mine_[leader_], shadow);
        next[leader_] = path.size() > 1 ? path[1] : path[0];
        auto moved = classical_move(team, shadow);
        int landed = -1;
        for (std::size_t i = 0; i < others.size(); ++i) {
            next[others[i]] = moved[i];
            if (moved[i] == shadow && landed < 0) landed = others[i];
        }
        if (landed >= 0) {
            stage_ = Stage::Trail;
            leader_ = landed;
        }
    } else {
        if (robber < 0) throw std::logic_error("shadow_capture: trailing cop lost sight");
        next[leader_] = shadow;
        auto moved = classical_move(team, robber);
        for (std::size_t i = 0; i < others.size(); ++i) next[others[i]] = moved[i];
    }
    // Step onto a robber in reach.
    if (robber >= 0)
        for (int c = 0; c < m_; ++c)
            if (g.dist(mine_[c], robber) <= 1) {
                next[c] = robber;
                break;
            }
    mine_ = next;
    return mine_;
}

}  // namespace copvis
