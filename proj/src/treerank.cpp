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

#include "copvis/treerank.hpp"

#include <algorithm>
#include <map>

namespace copvis {

namespace {

struct Choice {
    Vertex r = -1;
    VertexSet region;
    int rank = 0;
};

struct Entry {
    int rank = 1;
    Vertex hub = -1;
    std::vector<Choice> branches;
};

class Ranker {
public:
    Ranker(const Graph& t, int ell) : t_(t), span_(2 * ell + 2) {}

    const Entry& solve(const VertexSet& region)
    {
        if (auto it = memo_.find(region); it != memo_.end()) return it->second;
        Entry best;
        best.hub = region.members().front();
        const auto members = region.members();
        for (Vertex q : members) {
            // Best child per direction out of q.
            std::map<Vertex, Choice> per_dir;
            for (Vertex r : members) {
                if (t_.dist(q, r) != span_) continue;
                Vertex dir = -1;
                for (Vertex w : t_.neighbors(q))
                    if (region.contains(w) && t_.dist(w, r) == span_ - 1) dir = w;
                VertexSet away(t_.order());
                for (Vertex s : members)
                    if (t_.dist(s, q) == t_.dist(s, r) + span_) away.insert(s);
                const int sub = solve(away).rank;
                auto& slot = per_dir[dir];
                if (sub > slot.rank) slot = Choice{r, away, sub};
            }
            if (per_dir.size() < 3) continue;
            std::vector<Choice> top;
            for (auto& [dir, c] : per_dir) top.push_back(c);
            std::stable_sort(top.begin(), top.end(), [](const Choice& a, const Choice& b) { return a.rank > b.rank; });
            top.resize(3);
            const int k = 1 + top[2].rank;
            if (k > best.rank) best = Entry{k, q, std::move(top)};
        }
        return memo_.emplace(region, std::move(best)).first->second;
    }

    RankCertificate certificate(const VertexSet& region, int k)
    {
        const Entry e = solve(region);
        RankCertificate c;
        c.rank = k;
        c.hub = e.hub;
        if (k == 1) {
            c.hub = region.members().front();
            return c;
        }
        for (const Choice& ch : e.branches) {
            RankCertificate::Branch b;
            for (Vertex cur = c.hub; cur != ch.r;) {
                for (Vertex w : t_.neighbors(cur))
                    if (t_.dist(w, ch.r) == t_.dist(cur, ch.r) - 1) {
                        cur = w;
                        break;
                    }
                b.path.push_back(cur);
            }
            b.child = certificate(ch.region, k - 1);
            c.branches.push_back(std::move(b));
        }
        return c;
    }

private:
    const Graph& t_;
    int span_;
    std::map<VertexSet, Entry> memo_;
};

bool verify_in(const Graph& t, const RankCertificate& c, int ell, const VertexSet& region, std::vector<Vertex>& used)
{
    if (c.rank < 1 || !region.contains(c.hub)) return false;
    if (c.rank == 1) {
        if (!c.branches.empty()) return false;
        used.push_back(c.hub);
        return true;
    }
    if (c.branches.size() != 3) return false;
    const int span = 2 * ell + 2;
    used.push_back(c.hub);
    std::vector<Vertex> dirs;
    for (const auto& b : c.branches) {
        if (static_cast<int>(b.path.size()) != span) return false;
        Vertex prev = c.hub;
        for (Vertex v : b.path) {
            if (v < 0 || v >= t.order() || !region.contains(v) || !t.adjacent(prev, v)) return false;
            prev = v;
        }
        const Vertex r = b.path.back();
        if (t.dist(c.hub, r) != span) return false;
        dirs.push_back(b.path.front());
        if (b.child.rank != c.rank - 1) return false;
        VertexSet away(t.order());
        region.for_each([&](Vertex s) {
            if (t.dist(s, c.hub) == t.dist(s, r) + span) away.insert(s);
        });
        std::vector<Vertex> sub;
        if (!verify_in(t, b.child, ell, away, sub)) return false;
        used.insert(used.end(), b.path.begin(), b.path.end() - 1);
        if (std::find(sub.begin(), sub.end(), r) == sub.end()) used.push_back(r);
        used.insert(used.end(), sub.begin(), sub.end());
    }
    std::sort(dirs.begin(), dirs.end());
    return std::adjacent_find(dirs.begin(), dirs.end()) == dirs.end();
}

}  // namespace

TreeRank tree_rank(const Graph& tree, int ell)
{
    if (!tree.is_tree()) throw GraphError("tree_rank: graph is not a tree");
    if (ell < 0) throw GraphError("tree_rank: negative visibility");
    Ranker r(tree, ell);
    const VertexSet all = tree.all();
    TreeRank out;
    out.rank = r.solve(all).rank;
    out.certificate = r.certificate(all, out.rank);
    return out;
}

bool verify_certificate(const Graph& tree, const RankCertificate& cert, int ell)
{
    if (!tree.is_tree() || ell < 0) return false;
    std::vector<Vertex> used;
    if (!verify_in(tree, cert, ell, tree.all(), used)) return false;
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

HeightBound height_bound(const Graph& tree, int ell)
{
    const auto m = metrics(tree);
    const int span = 2 * ell + 2;
    auto up = [&](int h) { return std::max(1, (h + span - 1) / span); };
    return {up(m.radius), up(m.diameter)};
}

}  // namespace copvis
