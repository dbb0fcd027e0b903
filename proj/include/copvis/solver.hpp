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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copvis/engine.hpp"
#include "copvis/graph.hpp"

namespace copvis {

enum class Winner { Cops, Robber, Inconclusive };

std::string_view to_string(Winner w);

struct SolveOptions {
    /// Cop-to-move plus robber-to-move states kept before giving up.
    std::size_t max_states = 20'000'000;
    /// Rough ceiling on solver memory.
    std::size_t max_bytes = std::size_t{3} << 30;
    /// OpenMP threads; 0 leaves the runtime default.
    int workers = 0;
};

struct SolveStats {
    std::size_t cop_states = 0;
    std::size_t robber_states = 0;
    std::size_t actions = 0;
    /// States discovered per exploration layer.
    std::vector<std::size_t> frontier;
    /// Rounds the cops need from the start (placement counts as round 0).
    std::optional<int> rounds;
};

namespace detail {
struct Arena;
}

/**
 * Result of one solve. Owns the explored state graph so that optimal play
 * can be looked up afterwards. Limits: at most 64 vertices and 8 cops.
 */
class SolvedGame {
public:
    SolvedGame();
    SolvedGame(SolvedGame&&) noexcept;
    SolvedGame& operator=(SolvedGame&&) noexcept;
    ~SolvedGame();

    Winner winner() const { return winner_; }
    const SolveStats& stats() const { return stats_; }
    const GameSpec& spec() const { return spec_; }
    const Graph& graph() const { return g_; }

    /// Quickest winning placement, lowest first among ties (Cops only).
    std::optional<std::vector<Vertex>> placement() const;
    /// Cop moves still needed to win from a cop-to-move state; nullopt when
    /// the state is robber-winning or was never reached.
    std::optional<int> distance(const BeliefState& state) const;
    /// Optimal cop action from a winning cop-to-move state.
    std::optional<std::vector<Vertex>> cop_action(const BeliefState& state) const;
    /// Robber placement against a given cop placement, delaying capture as long as possible.
    Vertex robber_placement(std::span<const Vertex> cops) const;
    /// Robber move from a robber-to-move state with the robber at `robber`.
    Vertex robber_move(const BeliefState& state, Vertex robber) const;

    /// Winning cop-to-move states with their actions, keyed by encode().
    std::vector<std::pair<std::string, std::vector<Vertex>>> policy_table() const;

private:
    friend SolvedGame solve(const Graph&, const GameSpec&, const SolveOptions&, const std::optional<BeliefState>&);

    Graph g_;
    GameSpec spec_;
    Winner winner_ = Winner::Inconclusive;
    SolveStats stats_;
    std::unique_ptr<detail::Arena> arena_;
};

/**
 * Least-fixpoint solve over every reachable belief state. With `root`
 * the search starts from that state (either side to move) instead of
 * from all placements. Throws GraphError past the kernel limits.
 */
SolvedGame solve(const Graph& g, const GameSpec& spec, const SolveOptions& options = {},
                 const std::optional<BeliefState>& root = std::nullopt);

/**
 * Stable text form of a belief state: "c=0.3;p=I;s=2.5;m=2.5;t=c" with
 * cops, phase (I/V/D), territory or robber, monotone snapshot (omitted
 * when absent) and side to move (c/r).
 */
std::string encode(const BeliefState& state);

/// Serial engine-driven solver; slow, kept as an oracle for the kernel.
struct ReferenceResult {
    Winner winner = Winner::Inconclusive;
    std::optional<int> rounds;
    std::size_t states = 0;
};
ReferenceResult solve_reference(const Graph& g, const GameSpec& spec, std::size_t max_states = 200'000);

/// Policies backed by a solved game, usable in play_match.
class SolverCops : public CopPolicy {
public:
    explicit SolverCops(const SolvedGame& game) : game_(game) {}
    std::vector<Vertex> place(const Graph& g, const GameSpec& spec) override;
    std::vector<Vertex> move(const Graph& g, const GameSpec& spec, const BeliefState& state, int round) override;

private:
    const SolvedGame& game_;
};

class SolverRobber : public RobberPolicy {
public:
    explicit SolverRobber(const SolvedGame& game) : game_(game) {}
    Vertex place(const Graph& g, const GameSpec& spec, std::span<const Vertex> cops) override;
    Vertex move(const Graph& g, const GameSpec& spec, const BeliefState& state, Vertex robber, int round) override;

private:
    const SolvedGame& game_;
};

/// Smallest k with a cop win, trying k = 1..max_cops; nullopt if a solve is
/// inconclusive. k = n is answered without solving.
std::optional<int> cop_number(const Graph& g, Variant variant, int ell, const SolveOptions& options = {},
                              int max_cops = 8);

struct EllNumbers {
    int ell = 1;
    int capture = 0;              // c_ell
    int see = 0;                  // c'_ell
    std::optional<int> monotone;  // mc_ell
    int domination = 0;           // gamma_ell
};

struct Profile {
    int classical = 0;  // c
    int zero = 0;       // c_0
    int domination = 0; // gamma
    int radius = 0;
    int diameter = 0;
    std::optional<int> delayed;  // c_t
    std::vector<EllNumbers> per_ell;
};

struct ProfileOptions {
    std::vector<int> ells{1, 2};
    bool monotone = false;
    bool delayed = false;
    SolveOptions solve;
};

/// Throws std::runtime_error when a required solve is inconclusive.
Profile profile(const Graph& g, const ProfileOptions& options = {});

/// Human-readable list of every broken inequality among the profile's numbers.
std::vector<std::string> inequality_violations(const Profile& p);

struct WitnessSearch {
    std::optional<Graph> witness;
    std::optional<Profile> profile;
    std::size_t candidates = 0;
};

/// First candidate whose profile satisfies `accept`; `next` returns nullopt
/// when the stream is exhausted. Candidates failing `prefilter` are skipped
/// without profiling but still count against the budget.
WitnessSearch search_witness(const std::function<std::optional<Graph>()>& next,
                             const std::function<bool(const Graph&, const Profile&)>& accept,
                             const ProfileOptions& options, std::size_t budget,
                             const std::function<bool(const Graph&)>& prefilter = {});

}  // namespace copvis
