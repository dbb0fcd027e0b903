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
#include <bit>
#include <functional>

#include "copvis/graph.hpp"

namespace copvis {

std::vector<int> EliminationOrdering::positions() const
{
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

bool is_simplicial_ordering(const Graph& g, std::span<const Vertex> order)
{
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return false;
    }
    return true;
}

std::optional<EliminationOrdering> chordal_peo(const Graph& g)
{
    if (!g.connected()) throw GraphError("chordal_peo: graph is disconnected");
    const int n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!numbered[w]) ++weight[w];
    }
    EliminationOrdering ord{{visit.rbegin(), visit.rend()}, OrderingKind::Simplicial, {}};
    if (!is_simplicial_ordering(g, ord.order)) return std::nullopt;
    return ord;
}

namespace {

// N[v] restricted to the alive vertices is contained in N[u].
bool dominated_by(const Graph& g, const std::vector<bool>& alive, Vertex v, Vertex u)
{
    if (u == v || !alive[u]) return false;
    if (!g.adjacent(u, v)) return false;
    for (Vertex w : g.neighbors(v))
        if (alive[w] && w != u && !g.adjacent(w, u)) return false;
    return true;
}

}  // namespace

std::optional<EliminationOrdering> copwin_ordering(const Graph& g)
{
    const int n = g.order();
    EliminationOrdering ord;
    ord.kind = OrderingKind::CopWin;
    if (n == 0) return ord;
    std::vector<bool> alive(n, true);
    for (int left = n; left > 1; --left) {
        bool found = false;
        for (Vertex v = 0; v < n && !found; ++v) {
            if (!alive[v]) continue;
            for (Vertex u : g.neighbors(v)) {
                if (dominated_by(g, alive, v, u)) {
                    ord.order.push_back(v);
                    ord.witness.push_back(u);
                    alive[v] = false;
                    found = true;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            ord.order.push_back(v);
            ord.witness.push_back(-1);
        }
    return ord;
}

bool is_copwin_ordering(const Graph& g, const EliminationOrdering& ord)
{
    const int n = g.order();
    if (static_cast<int>(ord.order.size()) != n || ord.witness.size() != ord.order.size()) return false;
    std::vector<bool> alive(n, true);
    for (int i = 0; i < n; ++i) {
        Vertex v = ord.order[i];
        if (v < 0 || v >= n || !alive[v]) return false;
        if (i + 1 < n && !dominated_by(g, alive, v, ord.witness[i])) return false;
        alive[v] = false;
    }
    return true;
}

int k_domination_number(const Graph& g, int radius)
{
    const int n = g.order();
    if (n > 64) throw GraphError("k_domination_number: more than 64 vertices");
    if (radius < 0) throw GraphError("k_domination_number: negative radius");
    if (n == 0) return 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> ball(n);
    for (Vertex v = 0; v < n; ++v) ball[v] = g.closed_ball(v, radius).mask64();

    std::function<bool(int, std::uint64_t)> pick = [&](int left, std::uint64_t covered) {
        if (covered == all) return true;
        if (left == 0) return false;
        // Some vertex of the lowest uncovered vertex's ball must be chosen.
        Vertex target = std::countr_zero(~covered & all);
        for (Vertex v = 0; v < n; ++v) {
            if (!(ball[v] >> target & 1)) continue;
            if (pick(left - 1, covered | ball[v])) return true;
        }
        return false;
    };
    for (int size = 1; size <= n; ++size)
        if (pick(size, 0)) return size;
    return n;
}

bool is_retraction(const Graph& g, const VertexSet& image, std::span<const Vertex> map)
{
    if (static_cast<int>(map.size()) != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!image.contains(map[v])) return false;
        if (image.contains(v) && map[v] != v) return false;
    }
    for (auto [u, v] : g.edges())
        if (map[u] != map[v] && !g.adjacent(map[u], map[v])) return false;
    return true;
}

std::optional<std::vector<Vertex>> find_retraction(const Graph& g, const VertexSet& image)
{
    const int n = g.order();
    if (image.empty()) return std::nullopt;
    std::vector<Vertex> map(n, -1);
    image.for_each([&](Vertex v) { map[v] = v; });

    // Assign outside vertices in BFS order from the image so each one sees an
    // already-mapped neighbour as early as possible.
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> frontier = image.members();
    for (Vertex v : frontier) seen[v] = true;
    for (std::size_t head = 0; head < frontier.size(); ++head)
        for (Vertex w : g.neighbors(frontier[head]))
            if (!seen[w]) {
                seen[w] = true;
                frontier.push_back(w);
                order.push_back(w);
            }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) order.push_back(v);
    const std::vector<Vertex> targets = image.members();

    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
        if (i == order.size()) return true;
        Vertex v = order[i];
        for (Vertex h : targets) {
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (map[w] < 0) continue;
                if (map[w] != h && !g.adjacent(map[w], h)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = h;
            if (assign(i + 1)) return true;
            map[v] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return map;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, const VertexSet& removed)
{
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (removed.contains(s) || comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex w : g.neighbors(members[head]))
                if (!removed.contains(w) && comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<Vertex> cut_vertices(const Graph& g)
{
    std::vector<Vertex> out;
    const auto base = components_without(g, VertexSet(g.order())).size();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet r(g.order(), {v});
        if (components_without(g, r).size() > base) out.push_back(v);
    }
    return out;
}

}  // namespace copvis
