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

#include "copvis/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>
#include <queue>

namespace copvis {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0)
{
    if (universe < 0) throw GraphError("negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_mask64(int universe, std::uint64_t mask)
{
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

void VertexSet::check(Vertex v) const
{
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

void VertexSet::insert(Vertex v)
{
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::contains(Vertex v) const
{
    if (v < 0 || v >= n_) return false;
    return (words_[v / 64] >> (v % 64)) & 1;
}

int VertexSet::size() const
{
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& o) const
{
    for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
        if (words_[i] & ~other) return false;
    }
    return true;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o)
{
    if (o.n_ != n_) throw GraphError("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
    if (o.n_ != n_) throw GraphError("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o)
{
    if (o.n_ != n_) throw GraphError("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

// -------------------------------------------------------------------- Graph

Graph Graph::build(int n, std::span<const Edge> edges)
{
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw GraphError("self-loop at " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());

    g.dist_.assign(static_cast<std::size_t>(n) * n, kInfinity);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        int* row = &g.dist_[g.idx(s, 0)];
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.adj_[u]) {
                if (row[w] == kInfinity) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return g;
}

int Graph::dist(Vertex v, std::span<const Vertex> s) const
{
    int best = kInfinity;
    for (Vertex c : s) best = std::min(best, dist(v, c));
    return best;
}

VertexSet Graph::closed_ball(Vertex v, int r) const
{
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (r < 0) throw GraphError("negative radius");
    VertexSet s(n_);
    const int* row = &dist_[idx(v, 0)];
    for (Vertex u = 0; u < n_; ++u)
        if (row[u] <= r) s.insert(u);
    return s;
}

VertexSet Graph::closed_ball(std::span<const Vertex> centres, int r) const
{
    VertexSet s(n_);
    for (Vertex c : centres) s |= closed_ball(c, r);
    return s;
}

VertexSet Graph::closed_ball(const VertexSet& centres, int r) const
{
    VertexSet s(n_);
    centres.for_each([&](Vertex c) { s |= closed_ball(c, r); });
    return s;
}

bool Graph::connected() const
{
    if (n_ == 0) return true;
    for (Vertex v = 0; v < n_; ++v)
        if (dist(0, v) == kInfinity) return false;
    return true;
}

int Graph::eccentricity(Vertex v) const
{
    int e = 0;
    for (Vertex u = 0; u < n_; ++u) e = std::max(e, dist(v, u));
    return e;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= n_) throw GraphError("induced: vertex out of range");
        if (local[v] != -1) throw GraphError("induced: repeated vertex");
        local[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (local[u] >= 0 && local[v] >= 0) es.emplace_back(local[u], local[v]);
    return build(static_cast<int>(vertices.size()), es);
}

Metrics metrics(const Graph& g)
{
    if (!g.connected()) throw GraphError("metrics: graph is disconnected");
    Metrics m;
    if (g.order() == 0) return m;
    m.radius = kInfinity;
    for (Vertex v = 0; v < g.order(); ++v) {
        int e = g.eccentricity(v);
        m.diameter = std::max(m.diameter, e);
        if (e < m.radius) {
            m.radius = e;
            m.centre.clear();
        }
        if (e == m.radius) m.centre.push_back(v);
    }
    if (g.is_tree()) m.height = m.radius;
    return m;
}

std::string graph_hash(const Graph& g)
{
    std::string text = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) text += std::to_string(u) + " " + std::to_string(v) + "\n";
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace copvis
