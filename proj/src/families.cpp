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

#include "copvis/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

namespace copvis {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw GraphError("invalid recipe: " + what);
}

int size_at(const FamilyRecipe& r, std::size_t i, const char* what)
{
    require(r.sizes.size() > i, std::string("missing ") + what);
    return r.sizes[i];
}

std::vector<Edge> prufer_tree(int n, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    if (n <= 1) return edges;
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

struct TBuild {
    int n = 0;
    std::vector<Edge> edges;
    RankCertificate cert;
};

// Depth-first labelling: three children (each followed by its connecting
// path, listed from the attachment side), hub last.
TBuild build_tfamily(int k, int ell, const std::vector<int>& attachments)
{
    TBuild out;
    if (k == 1) {
        out.n = 1;
        out.cert = RankCertificate{1, 0, {}};
        return out;
    }
    const int interior = 2 * ell + 1;
    std::vector<RankCertificate::Branch> branches;
    std::vector<Vertex> path_ends;  // path vertex adjacent to the hub
    for (int i = 0; i < 3; ++i) {
        TBuild child = build_tfamily(k - 1, ell, attachments);
        const int offset = out.n;
        int attach = child.cert.hub;
        const std::size_t level = static_cast<std::size_t>(k - 2);
        if (level < attachments.size() && attachments[level] >= 0) {
            require(attachments[level] < child.n, "attachment index outside child");
            attach = attachments[level];
        }
        for (auto [u, v] : child.edges) out.edges.emplace_back(u + offset, v + offset);
        out.n += child.n;
        // Interior path vertices from the attachment toward the hub.
        std::vector<Vertex> inner;
        Vertex prev = attach + offset;
        for (int j = 0; j < interior; ++j) {
            Vertex v = out.n++;
            out.edges.emplace_back(prev, v);
            inner.push_back(v);
            prev = v;
        }
        path_ends.push_back(prev);
        RankCertificate::Branch br;
        br.path.assign(inner.rbegin(), inner.rend());
        br.path.push_back(attach + offset);
        br.child = std::move(child.cert);
        // Shift the child certificate into the parent labelling.
        std::vector<RankCertificate*> stack{&br.child};
        while (!stack.empty()) {
            RankCertificate* c = stack.back();
            stack.pop_back();
            c->hub += offset;
            for (auto& b : c->branches) {
                for (auto& v : b.path) v += offset;
                stack.push_back(&b.child);
            }
        }
        branches.push_back(std::move(br));
    }
    const Vertex hub = out.n++;
    for (Vertex e : path_ends) out.edges.emplace_back(e, hub);
    out.cert.rank = k;
    out.cert.hub = hub;
    out.cert.branches = std::move(branches);
    return out;
}

}  // namespace

std::vector<Vertex> subdivided_edge_path(int depth, int subdivisions, int child_heap_index)
{
    const int originals = (1 << (depth + 1)) - 1;
    if (child_heap_index < 1 || child_heap_index >= originals) throw GraphError("not a child node");
    std::vector<Vertex> out;
    const int base = originals + (child_heap_index - 1) * subdivisions;
    for (int j = 0; j < subdivisions; ++j) out.push_back(base + j);
    return out;
}

Family generate(const FamilyRecipe& r)
{
    Family f;
    std::vector<Edge> edges;
    int n = 0;
    std::mt19937_64 rng(r.seed);
    switch (r.kind) {
    case FamilyKind::Path: {
        n = size_at(r, 0, "n");
        require(n >= 1, "path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        f.name = "P" + std::to_string(n);
        break;
    }
    case FamilyKind::Cycle: {
        n = size_at(r, 0, "n");
        require(n >= 3, "cycle needs n >= 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        f.name = "C" + std::to_string(n);
        break;
    }
    case FamilyKind::Complete: {
        n = size_at(r, 0, "n");
        require(n >= 1, "complete graph needs n >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        f.name = "K" + std::to_string(n);
        break;
    }
    case FamilyKind::CompleteBipartite: {
        const int a = size_at(r, 0, "m"), b = size_at(r, 1, "n");
        require(a >= 1 && b >= 1, "bipartite sides must be positive");
        n = a + b;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        f.labels["left"] = {};
        for (int i = 0; i < a; ++i) f.labels["left"].push_back(i);
        f.name = "K" + std::to_string(a) + "," + std::to_string(b);
        break;
    }
    case FamilyKind::Spider: {
        require(!r.sizes.empty(), "spider needs legs");
        n = 1;
        f.labels["centre"] = {0};
        for (int len : r.sizes) {
            require(len >= 1, "spider legs must have positive length");
            Vertex prev = 0;
            for (int j = 0; j < len; ++j) {
                edges.emplace_back(prev, n);
                prev = n++;
            }
            f.labels["leg_ends"].push_back(prev);
        }
        f.name = "spider";
        break;
    }
    case FamilyKind::TFamily: {
        require(r.k >= 1, "k must be >= 1");
        require(r.ell >= 0, "ell must be >= 0");
        TBuild t = build_tfamily(r.k, r.ell, r.attachments);
        n = t.n;
        edges = std::move(t.edges);
        f.labels["q"] = {t.cert.hub};
        for (const auto& b : t.cert.branches) f.labels["attach"].push_back(b.path.back());
        f.certificate = std::move(t.cert);
        f.name = "T" + std::to_string(r.k) + "," + std::to_string(r.ell);
        break;
    }
    case FamilyKind::SubdividedBinary: {
        require(r.depth >= 0 && r.depth <= 10, "depth out of range");
        require(r.subdivisions >= 0, "subdivisions must be >= 0");
        const int originals = (1 << (r.depth + 1)) - 1;
        n = originals + (originals - 1) * r.subdivisions;
        for (int c = 1; c < originals; ++c) {
            Vertex prev = (c - 1) / 2;
            for (Vertex v : subdivided_edge_path(r.depth, r.subdivisions, c)) {
                edges.emplace_back(prev, v);
                prev = v;
            }
            edges.emplace_back(prev, c);
        }
        f.labels["root"] = {0};
        for (int c = 0; c < originals; ++c) f.labels["original"].push_back(c);
        if (r.depth >= 2) {
            f.labels["a"] = {1};
            f.labels["b"] = {4};
            f.labels["a_b_path"] = subdivided_edge_path(r.depth, r.subdivisions, 4);
        }
        f.name = "subdivided_binary";
        break;
    }
    case FamilyKind::RandomTree: {
        n = size_at(r, 0, "n");
        require(n >= 1, "tree needs n >= 1");
        edges = prufer_tree(n, rng);
        f.name = "randtree";
        break;
    }
    case FamilyKind::RandomChordal: {
        n = size_at(r, 0, "n");
        require(n >= 1, "chordal graph needs n >= 1");
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        std::bernoulli_distribution grow(r.density);
        for (int v = 1; v < n; ++v) {
            Vertex u = std::uniform_int_distribution<int>(0, v - 1)(rng);
            std::vector<Vertex> clique{u};
            std::vector<Vertex> cand;
            for (int w = 0; w < v; ++w)
                if (adj[u][w]) cand.push_back(w);
            std::shuffle(cand.begin(), cand.end(), rng);
            for (Vertex w : cand) {
                bool all = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adj[c][w]; });
                if (all && grow(rng)) clique.push_back(w);
            }
            for (Vertex c : clique) {
                adj[c][v] = adj[v][c] = true;
                edges.emplace_back(c, v);
            }
        }
        f.name = "randchordal";
        break;
    }
    case FamilyKind::RandomConnected: {
        n = size_at(r, 0, "n");
        require(n >= 1, "graph needs n >= 1");
        edges = prufer_tree(n, rng);
        std::set<Edge> have;
        for (auto [u, v] : edges) have.emplace(std::min(u, v), std::max(u, v));
        std::bernoulli_distribution extra(r.density);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!have.count({u, v}) && extra(rng)) edges.emplace_back(u, v);
        f.name = "randconnected";
        break;
    }
    case FamilyKind::RandomCopWin: {
        n = size_at(r, 0, "n");
        require(n >= 1, "graph needs n >= 1");
        std::vector<std::vector<Vertex>> nbrs(n);
        std::bernoulli_distribution grow(r.density);
        for (int v = 1; v < n; ++v) {
            // v becomes a corner dominated by u at insertion time.
            Vertex u = std::uniform_int_distribution<int>(0, v - 1)(rng);
            std::vector<Vertex> attach{u};
            for (Vertex w : nbrs[u])
                if (grow(rng)) attach.push_back(w);
            for (Vertex w : attach) {
                nbrs[w].push_back(v);
                nbrs[v].push_back(w);
                edges.emplace_back(w, v);
            }
        }
        f.name = "randcopwin";
        break;
    }
    case FamilyKind::Petersen: {
        n = 10;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            edges.emplace_back(i, 5 + i);
        }
        f.name = "petersen";
        break;
    }
    }
    f.graph = Graph::build(n, edges);
    return f;
}

namespace {

int to_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw GraphError("invalid recipe: expected integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

}  // namespace

FamilyRecipe parse_recipe(std::string_view text)
{
    FamilyRecipe r;
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    std::map<std::string, std::string, std::less<>> kv;
    std::vector<int> positional;
    if (!args.empty()) {
        for (auto part : split(args, ',')) {
            auto eq = part.find('=');
            if (eq == std::string_view::npos)
                positional.push_back(to_int(part));
            else
                kv.emplace(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
        }
    }
    auto get = [&](const char* key, int fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : to_int(it->second);
    };
    if (auto it = kv.find("seed"); it != kv.end()) r.seed = std::stoull(it->second);
    if (auto it = kv.find("p"); it != kv.end()) r.density = std::stod(it->second);

    const std::map<std::string_view, FamilyKind> kinds{
        {"path", FamilyKind::Path},
        {"cycle", FamilyKind::Cycle},
        {"complete", FamilyKind::Complete},
        {"bipartite", FamilyKind::CompleteBipartite},
        {"spider", FamilyKind::Spider},
        {"tfamily", FamilyKind::TFamily},
        {"subdivided", FamilyKind::SubdividedBinary},
        {"randtree", FamilyKind::RandomTree},
        {"randchordal", FamilyKind::RandomChordal},
        {"randconnected", FamilyKind::RandomConnected},
        {"randcopwin", FamilyKind::RandomCopWin},
        {"petersen", FamilyKind::Petersen},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw GraphError("unknown recipe kind '" + std::string(name) + "'");
    r.kind = it->second;
    switch (r.kind) {
    case FamilyKind::TFamily:
        r.k = get("k", positional.size() > 0 ? positional[0] : 1);
        r.ell = get("ell", positional.size() > 1 ? positional[1] : 1);
        if (auto a = kv.find("attach"); a != kv.end())
            for (auto part : split(a->second, ';')) r.attachments.push_back(to_int(part));
        break;
    case FamilyKind::SubdividedBinary:
        r.depth = get("depth", positional.size() > 0 ? positional[0] : 3);
        r.subdivisions = get("s", positional.size() > 1 ? positional[1] : 3);
        break;
    case FamilyKind::Petersen:
        break;
    default:
        if (kv.count("n"))
            r.sizes.push_back(get("n", 0));
        else
            r.sizes = positional;
        break;
    }
    return r;
}

}  // namespace copvis
