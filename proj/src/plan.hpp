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

// Building blocks for scripted strategies: per-cop walks that are glued
// in time (then) or side by side (with).

#pragma once

#include <vector>

#include "copvis/engine.hpp"
#include "copvis/graph.hpp"

namespace copvis::detail {

/// w[c][0] is cop c's starting vertex; every walk has the same length.
struct Seg {
    std::vector<std::vector<Vertex>> w;

    Seg() = default;
    explicit Seg(std::vector<Vertex> start);

    int cops() const { return static_cast<int>(w.size()); }
    int length() const { return w.empty() ? 0 : static_cast<int>(w.front().size()) - 1; }
    std::vector<Vertex> end() const;

    /// Appends `next`, which must start where this segment ends.
    void then(const Seg& next);
    /// Stretches every walk to `rounds` rounds by passing.
    void pad(int rounds);
    Script script() const { return Script{w}; }
};

/// Cops of `a` followed by cops of `b`, padded to the longer one.
Seg with(Seg a, Seg b);
/// Single-cop segment following `walk` (walk[0] is the start).
Seg single(std::vector<Vertex> walk);
/// `cops` cops standing together on walk[0], all following `walk`.
Seg follow(int cops, const std::vector<Vertex>& walk);

/// Shortest path from u to v inclusive, lowest-numbered step first.
std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v);
/// Geodesics through every waypoint, starting at the first.
std::vector<Vertex> route(const Graph& g, const std::vector<Vertex>& waypoints);
/// Each cop walks a geodesic to its target; the rest wait at their target.
Seg travel(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to);
/// a, b, a, b, ... for `rounds` rounds after the start at a.
Seg vibrate(Vertex a, Vertex b, int rounds);

/// `to` reordered so that to'[i] is reachable in one step from from[i].
/// Throws MoveError when no such order exists.
std::vector<Vertex> assign(const Graph& g, const std::vector<Vertex>& from, std::vector<Vertex> to);

/// Parent and children of a tree hung from `root`.
struct Rooted {
    Rooted(const Graph& tree, Vertex root);

    const Graph& g;
    Vertex root;
    std::vector<Vertex> parent;
    std::vector<int> depth;
    /// Height of the subtree below each vertex.
    std::vector<int> height;
    std::vector<std::vector<Vertex>> children;

    /// v and its descendants, in preorder.
    std::vector<Vertex> subtree(Vertex v) const;
    /// Descendants of v exactly `below` levels down.
    std::vector<Vertex> level(Vertex v, int below) const;
};

}  // namespace copvis::detail
