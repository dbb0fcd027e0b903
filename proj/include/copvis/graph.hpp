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
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copvis {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Distance reported between vertices in different components.
inline constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Membership bit-vector over the vertices 0..universe-1.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet full(int universe);

    int universe() const { return n_; }
    void insert(Vertex v);
    void erase(Vertex v);
    bool contains(Vertex v) const;
    int size() const;
    bool empty() const;
    bool intersects(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;
    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    /// Low 64 members as a mask; only meaningful when universe() <= 64.
    std::uint64_t mask64() const { return words_.empty() ? 0 : words_[0]; }
    static VertexSet from_mask64(int universe, std::uint64_t mask);

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b)
    {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

private:
    void check(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/**
 * Immutable finite simple graph on vertices 0..n-1 with all-pairs hop
 * distances computed at construction.
 */
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on out-of-range endpoints, self-loops or duplicate edges.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges)
    {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    /// Sorted, normalised (u < v) edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return u != v && dist_[idx(u, v)] == 1; }
    int dist(Vertex u, Vertex v) const { return dist_[idx(u, v)]; }
    /// Distance from v to the nearest member of s (kInfinity when s is empty).
    int dist(Vertex v, std::span<const Vertex> s) const;

    VertexSet all() const { return VertexSet::full(n_); }
    VertexSet closed_neighborhood(Vertex v) const { return closed_ball(v, 1); }
    VertexSet closed_ball(Vertex v, int r) const;
    VertexSet closed_ball(std::span<const Vertex> centres, int r) const;
    VertexSet closed_ball(const VertexSet& centres, int r) const;

    bool connected() const;
    bool is_tree() const { return connected() && size() == n_ - 1; }
    int eccentricity(Vertex v) const;

    /// Induced subgraph; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

private:
    std::size_t idx(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> dist_;
};

struct Metrics {
    int radius = 0;
    int diameter = 0;
    std::vector<Vertex> centre;
    /// Minimum eccentricity; present only for trees.
    std::optional<int> height;
};

/// Requires a connected graph.
Metrics metrics(const Graph& g);

enum class OrderingKind { Simplicial, CopWin };

/**
 * Elimination sequence: order[0] is removed first. For Simplicial every
 * vertex's later neighbours form a clique; for CopWin every vertex except
 * the last is dominated within the graph induced on itself and later vertices.
 */
struct EliminationOrdering {
    std::vector<Vertex> order;
    OrderingKind kind = OrderingKind::Simplicial;
    /// Dominating vertex for each eliminated corner (CopWin only, -1 for the last).
    std::vector<Vertex> witness;

    /// Position of every vertex in the elimination sequence.
    std::vector<int> positions() const;
};

/// Maximum-cardinality search, validated; nullopt when g is not chordal.
/// Throws GraphError on a disconnected graph.
std::optional<EliminationOrdering> chordal_peo(const Graph& g);
bool is_simplicial_ordering(const Graph& g, std::span<const Vertex> order);

std::optional<EliminationOrdering> copwin_ordering(const Graph& g);
bool is_copwin_ordering(const Graph& g, const EliminationOrdering& ord);

/// Smallest S with every vertex within distance radius of S. Exhaustive;
/// intended for n <= ~20, throws GraphError above 64 vertices.
int k_domination_number(const Graph& g, int radius);

/**
 * Backtracking search for a reflexive homomorphism g -> g[image] fixing every
 * vertex of image (edges may collapse). Returns the map as a vertex table.
 * Intended for n <= ~12.
 */
std::optional<std::vector<Vertex>> find_retraction(const Graph& g, const VertexSet& image);
bool is_retraction(const Graph& g, const VertexSet& image, std::span<const Vertex> map);

std::vector<Vertex> cut_vertices(const Graph& g);
/// Connected components of g - removed, each as a sorted vertex list.
std::vector<std::vector<Vertex>> components_without(const Graph& g, const VertexSet& removed);

/// 64-bit FNV-1a over the canonical "n m / u v" text, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace copvis
