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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copvis/graph.hpp"

namespace copvis {

enum class Variant { See, Capture, MonotoneCapture, TimeDelayed, Classical, ZeroVis };

std::string_view to_string(Variant v);
/// Accepts "see", "capture", "monotone", "delayed", "classical", "zerovis".
Variant parse_variant(std::string_view text);

/**
 * Rules of one game. Use GameSpec::make, which folds Classical into Capture
 * with ell = diam(g) and ZeroVis into Capture with ell = 0; `requested`
 * keeps what the caller asked for.
 */
struct GameSpec {
    Variant variant = Variant::Capture;
    Variant requested = Variant::Capture;
    int ell = 0;
    int cops = 1;

    static GameSpec make(const Graph& g, Variant variant, int ell, int cops);

    bool seeing_wins() const { return variant == Variant::See; }
    bool monotone() const { return variant == Variant::MonotoneCapture; }
    bool delayed() const { return variant == Variant::TimeDelayed; }
};

class MoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cop move that would let the unseen territory grow under the monotone variant.
class MonotonicityError : public MoveError {
public:
    using MoveError::MoveError;
};

enum class Phase { Invisible, Visible, Delayed };

/**
 * Canonical game position as known to the cops. `territory` is the unseen
 * territory (Invisible) or the belief set (Delayed); `robber` is set only
 * when Visible. States with robber_to_move == false are observed positions
 * at the start of a round; the others sit between the cop and robber
 * half-moves.
 */
struct BeliefState {
    std::vector<Vertex> cops;
    Phase phase = Phase::Invisible;
    VertexSet territory;
    Vertex robber = -1;
    /// Monotone variant only: the last post-cop-move territory.
    std::optional<VertexSet> snapshot;
    bool robber_to_move = false;

    friend bool operator==(const BeliefState&, const BeliefState&) = default;
};

enum class BranchTag { Captured, Seen, Hidden };

struct Branch {
    BranchTag tag = BranchTag::Hidden;
    BeliefState state;
    /// Delayed phase: the robber position revealed by this branch.
    Vertex origin = -1;
};

struct BranchSet {
    std::vector<Branch> branches;
    /// Set when the cops win in every branch (seen counts under See).
    bool cop_win = false;
};

/// Sorted copy of a cop multiset.
std::vector<Vertex> sorted_cops(std::vector<Vertex> cops);

/// True when each cop of `from` can step (or pass) to a distinct slot of `to`.
bool can_move(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to);

BranchSet initial_branches(const Graph& g, const GameSpec& spec, std::vector<Vertex> placement);
/// Throws MoveError on an illegal step and MonotonicityError on a monotone violation.
BranchSet cop_turn(const Graph& g, const GameSpec& spec, const BeliefState& state, std::vector<Vertex> new_cops);
BranchSet robber_turn(const Graph& g, const GameSpec& spec, const BeliefState& state);

/// walks[i][t] is cop i's vertex in round t; round 0 is the placement.
struct Script {
    std::vector<std::vector<Vertex>> walks;

    int cops() const { return static_cast<int>(walks.size()); }
    int rounds() const { return walks.empty() ? 0 : static_cast<int>(walks.front().size()); }
    std::vector<Vertex> at(int round) const;
};

/// Throws MoveError unless every walk is a legal walk of common length.
void validate_script(const Graph& g, const Script& script);

struct CleaningReport {
    /// territory[t] is the unseen territory just after the cops' move in round t.
    std::vector<VertexSet> territory;
    /// seen[t]: vertices where a robber would be spotted during round t.
    std::vector<std::vector<Vertex>> seen;
    std::optional<int> seen_guaranteed_at;
    std::optional<int> cleaned_at;
    bool monotone = true;
    struct Event {
        Vertex vertex;
        int round;
    };
    std::vector<Event> recontaminations;
    /// Rounds in which the territory shrank to one vertex.
    std::vector<Event> located;
};

CleaningReport simulate_script(const Graph& g, const GameSpec& spec, const Script& script);

/// Cop side of a match. `move` receives the observed state for the round.
class CopPolicy {
public:
    virtual ~CopPolicy() = default;
    virtual std::vector<Vertex> place(const Graph& g, const GameSpec& spec) = 0;
    virtual std::vector<Vertex> move(const Graph& g, const GameSpec& spec, const BeliefState& state, int round) = 0;
    /// What the cops see right after their own half-move (round 0: the placement).
    virtual void observe(const Graph&, const GameSpec&, const BeliefState&, int) {}
};

/// Robber side; sees everything, including what the cops know (`state`,
/// between the cop and robber half-moves).
class RobberPolicy {
public:
    virtual ~RobberPolicy() = default;
    virtual Vertex place(const Graph& g, const GameSpec& spec, std::span<const Vertex> cops) = 0;
    virtual Vertex move(const Graph& g, const GameSpec& spec, const BeliefState& state, Vertex robber, int round) = 0;
};

enum class MatchOutcome { Captured, Seen, Timeout };

std::string_view to_string(MatchOutcome o);

struct TraceRound {
    int round = 0;
    std::vector<Vertex> cops;
    Vertex robber = -1;
    /// State the cops observe after the robber's move.
    BeliefState observed;
};

struct Trace {
    MatchOutcome outcome = MatchOutcome::Timeout;
    int rounds = 0;
    std::vector<TraceRound> log;
};

/// Position to resume from instead of a fresh placement: the robber is at
/// `robber`, visible, and moves next unless `cops_to_move`.
struct MatchStart {
    std::vector<Vertex> cops;
    Vertex robber = -1;
    bool cops_to_move = false;
};

/**
 * Referee loop. Every observation is cross-checked against the branch
 * structure: the true robber position must lie in exactly one branch
 * (std::logic_error otherwise). Throws MoveError when a policy moves illegally.
 */
Trace play_match(const Graph& g, const GameSpec& spec, CopPolicy& cops, RobberPolicy& robber, int max_rounds,
                 const std::optional<MatchStart>& start = std::nullopt);

}  // namespace copvis
