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

#include "plan.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace copvis::detail {

Seg::Seg(std::vector<Vertex> start)
{
    for (Vertex v : start) w.push_back({v});
}

std::vector<Vertex> Seg::end() const
{
    std::vector<Vertex> out;
    for (const auto& walk : w) out.push_back(walk.back());
    return out;
}

void Seg::then(const Seg& next)
{
    if (next.cops() != cops()) throw std::logic_error("Seg::then: cop count mismatch");
    for (int c = 0; c < cops(); ++c) {
        if (next.w[c].front() != w[c].back()) throw std::logic_error("Seg::then: segments do not meet");
        w[c].insert(w[c].end(), next.w[c].begin() + 1, next.w[c].end());
    }
}

void Seg::pad(int rounds)
{
    for (auto& walk : w)
        while (static_cast<int>(walk.size()) < rounds + 1) walk.push_back(walk.back());
}

Seg with(Seg a, Seg b)
{
    const int len = std::max(a.length(), b.length());
    a.pad(len);
    b.pad(len);
    a.w.insert(a.w.end(), b.w.begin(), b.w.end());
    return a;
}

Seg single(std::vector<Vertex> walk)
{
    Seg s;
    s.w.push_back(std::move(walk));
    return s;
}

Seg follow(int cops, const std::vector<Vertex>& walk)
{
    Seg s;
    s.w.assign(cops, walk);
    return s;
}

std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v)
{
    std::vector<Vertex> path{u};
    while (u != v) {
        for (Vertex x : g.neighbors(u))
            if (g.dist(x, v) == g.dist(u, v) - 1) {
                u = x;
                break;
            }
        path.push_back(u);
    }
    return path;
}

std::vector<Vertex> route(const Graph& g, const std::vector<Vertex>& waypoints)
{
    std::vector<Vertex> walk{waypoints.front()};
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        auto leg = geodesic(g, walk.back(), waypoints[i]);
        walk.insert(walk.end(), leg.begin() + 1, leg.end());
    }
    return walk;
}

Seg travel(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to)
{
    Seg s;
    for (std::size_t c = 0; c < from.size(); ++c) s.w.push_back(geodesic(g, from[c], to[c]));
    int len = 0;
    for (const auto& walk : s.w) len = std::max(len, static_cast<int>(walk.size()) - 1);
    s.pad(len);
    return s;
}

Seg vibrate(Vertex a, Vertex b, int rounds)
{
    std::vector<Vertex> walk{a};
    for (int t = 1; t <= rounds; ++t) walk.push_back(t % 2 ? b : a);
    return single(std::move(walk));
}

std::vector<Vertex> assign(const Graph& g, const std::vector<Vertex>& from, std::vector<Vertex> to)
{
    const std::size_t k = from.size();
    if (to.size() != k) throw MoveError("assign: cop count mismatch");
    std::vector<Vertex> out(k);
    std::vector<bool> used(k, false);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == k) return true;
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j] || g.dist(from[i], to[j]) > 1) continue;
            used[j] = true;
            out[i] = to[j];
            if (go(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (!go(0)) throw MoveError("assign: target not reachable in one step");
    return out;
}

Rooted::Rooted(const Graph& tree, Vertex r)
    : g(tree), root(r), parent(tree.order(), -1), depth(tree.order(), 0), height(tree.order(), 0),
      children(tree.order())
{
    std::vector<Vertex> order{r};
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (Vertex u : tree.neighbors(v)) {
            if (u == parent[v]) continue;
            parent[u] = v;
            depth[u] = depth[v] + 1;
            children[v].push_back(u);
            order.push_back(u);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) height[parent[*it]] = std::max(height[parent[*it]], height[*it] + 1);
}

std::vector<Vertex> Rooted::subtree(Vertex v) const
{
    std::vector<Vertex> out;
    std::function<void(Vertex)> walk = [&](Vertex u) {
        out.push_back(u);
        for (Vertex c : children[u]) walk(c);
    };
    walk(v);
    return out;
}

std::vector<Vertex> Rooted::level(Vertex v, int below) const
{
    std::vector<Vertex> out;
    for (Vertex u : subtree(v))
        if (depth[u] == depth[v] + below) out.push_back(u);
    return out;
}

}  // namespace copvis::detail
