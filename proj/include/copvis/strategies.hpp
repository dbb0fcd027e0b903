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

#pragma once

#include <optional>
#include <vector>

#include "copvis/certificate.hpp"
#include "copvis/engine.hpp"
#include "copvis/families.hpp"
#include "copvis/graph.hpp"
#include "copvis/solver.hpp"

namespace copvis {

/**
 * One-visibility cleaning of a tree with max(1, ceil(h/3)) cops, h the
 * height from a centre vertex. A guard vibrates next to the root while the
 * rest of the cops clean the subtrees three levels down. Throws GraphError
 * on a non-tree.
 */
Script tree_one_visibility_script(const Graph& tree);

/**
 * Cleaning script for a hub-family member with cert.rank cops: per branch,
 * one cop vibrates at the gate (distance ell and ell+1 from the hub) while
 * the others clean the child recursively. Every cop starts on the hub.
 */
Script t_family_script(const Graph& tree, const RankCertificate& cert);
/// Throws GraphError when the family carries no certificate.
Script t_family_script(const Family& family);

struct TEllScripts {
    Script two_cop;
    Script three_cop_monotone;
};

/// Scripts for the subdivided binary tree of depth 3 with 2*ell+1
/// subdivisions per edge. Throws GraphError on any other graph.
TEllScripts t_ell_scripts(const Graph& g, int ell);

enum class GuardMode {
    /// The root is occupied at least every second round.
    Occupy,
    /// The root is within distance ell of a cop at least every second round.
    See,
};

/**
 * Cleaning with k-1 cops that keeps the root guarded. Occupy: one cop
 * vibrates between the root and a child while k-2 cops clean the subtrees
 * at depth ceil(i/2) below that child (needs i <= 2*ell+2). See: the same
 * construction run at every depth-floor(i/2) vertex (needs i < 2*ell+2).
 * Subtree scripts come from the SEE solver. Throws GraphError when a
 * subtree needs more than k-2 cops.
 */
Script root_guarded_script(const Graph& tree, Vertex root, int k, int ell, int i, GuardMode mode,
                           const SolveOptions& options = {});

/// True when, for every pair of consecutive rounds, one of them has the root guarded.
bool root_guarded(const Graph& g, const Script& script, Vertex root, int ell, GuardMode mode);

/**
 * The cops' walk in a solved SEE game while the robber stays hidden.
 * Nullopt unless the cops win.
 */
std::optional<Script> script_from_see_policy(const SolvedGame& game);

/**
 * Single-cop pursuit on a chordal graph once the robber is in sight. Each
 * round the cop steps one closer to the robber's previous vertex (its
 * current vertex on the first move), preferring the lowest elimination
 * index (the last vertex eliminated has index 1), and steps onto the
 * robber when adjacent. Use with a MatchStart having cops_to_move set.
 */
class ChordalPursuit : public CopPolicy {
public:
    /// Throws GraphError unless `order` is a simplicial elimination ordering
    /// and start is within ell of first_sight.
    ChordalPursuit(const Graph& g, const EliminationOrdering& order, Vertex start, Vertex first_sight, int ell);

    std::vector<Vertex> place(const Graph& g, const GameSpec& spec) override;
    std::vector<Vertex> move(const Graph& g, const GameSpec& spec, const BeliefState& state, int round) override;

    /// Vertex the last move was aimed at.
    Vertex target() const { return target_; }

private:
    std::vector<int> pos_;
    Vertex start_;
    Vertex previous_;
    Vertex target_ = -1;
};

/**
 * Capture with m = max(c'_ell, c + 1) cops for ell >= 2. Until the robber
 * is first seen the cops follow the solved SEE policy; then one cop keeps
 * within ell of the robber's shadow (its vertex one round earlier) while
 * the others play the solved classical game against the shadow. Once a cop
 * lands on the shadow it trails the robber and the rest play the
 * classical game against the robber.
 */
class ShadowCapture : public CopPolicy {
public:
    /// Throws GraphError for ell < 2 and std::runtime_error on an
    /// inconclusive solve.
    ShadowCapture(const Graph& g, int ell, const SolveOptions& options = {});

    int cops() const { return m_; }
    int classical_number() const { return classical_; }
    int see_number() const { return see_; }

    std::vector<Vertex> place(const Graph& g, const GameSpec& spec) override;
    std::vector<Vertex> move(const Graph& g, const GameSpec& spec, const BeliefState& state, int round) override;
    void observe(const Graph& g, const GameSpec& spec, const BeliefState& state, int round) override;

    enum class Stage { Search, Track, Trail };
    Stage stage() const { return stage_; }

    /// Forget the match history; the solved games are kept.
    void reset();

private:
    std::vector<Vertex> classical_move(std::vector<Vertex> team, Vertex robber) const;

    int classical_ = 0;
    int see_ = 0;
    int m_ = 0;
    SolvedGame see_game_;
    SolvedGame classical_game_;

    Stage stage_ = Stage::Search;
    std::vector<Vertex> mine_;  // positions by cop identity
    Vertex mid_seen_ = -1;      // robber seen right after our last move
    int leader_ = -1;           // shadow tracker, then trailer
};

}  // namespace copvis
