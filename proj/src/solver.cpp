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

#include "copvis/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>

namespace copvis {

std::string_view to_string(Winner w)
{
    switch (w) {
    case Winner::Cops: return "COPS";
    case Winner::Robber: return "ROBBER";
    case Winner::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace detail {

enum Kind : std::uint8_t { kCopInv, kCopVis, kCopDel, kRobInv, kRobVis, kRobDel, kPlace, kRoot };

inline bool is_or(std::uint8_t k) { return k <= kCopDel || k == kRoot; }

// Cops are packed one vertex per byte in ascending order; sets are masks.
struct Key {
    std::uint64_t cops = 0;
    std::uint64_t set = 0;
    std::uint64_t snap = 0;
    std::uint8_t kind = 0;

    friend bool operator==(const Key&, const Key&) = default;
};

inline std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_key(const Key& k) { return mix(k.cops ^ mix(k.set ^ mix(k.snap ^ k.kind))); }

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Arena {
    std::vector<Key> keys;
    std::vector<std::uint32_t> table;
    std::vector<std::uint64_t> node_off{0};
    /// OR nodes: action indices. AND nodes: successor ids.
    std::vector<std::uint32_t> slots;
    std::vector<std::uint64_t> act_cops;
    std::vector<std::uint64_t> act_off{0};
    std::vector<std::uint32_t> mem;
    std::vector<std::uint32_t> level;
    std::vector<std::uint32_t> choice;
    std::uint32_t root = kNone;

    std::uint32_t find(const Key& k) const
    {
        if (table.empty()) return kNone;
        const std::uint64_t mask = table.size() - 1;
        for (std::uint64_t i = hash_key(k) & mask;; i = (i + 1) & mask) {
            std::uint32_t id = table[i];
            if (id == kNone) return kNone;
            if (keys[id] == k) return id;
        }
    }

    std::pair<std::uint32_t, bool> intern(const Key& k)
    {
        if ((keys.size() + 1) * 2 > table.size()) grow();
        const std::uint64_t mask = table.size() - 1;
        for (std::uint64_t i = hash_key(k) & mask;; i = (i + 1) & mask) {
            std::uint32_t id = table[i];
            if (id == kNone) {
                id = static_cast<std::uint32_t>(keys.size());
                table[i] = id;
                keys.push_back(k);
                return {id, true};
            }
            if (keys[id] == k) return {id, false};
        }
    }

    void grow()
    {
        std::vector<std::uint32_t> t(std::max<std::size_t>(1024, table.size() * 2), kNone);
        const std::uint64_t mask = t.size() - 1;
        for (std::uint32_t id = 0; id < keys.size(); ++id) {
            std::uint64_t i = hash_key(keys[id]) & mask;
            while (t[i] != kNone) i = (i + 1) & mask;
            t[i] = id;
        }
        table.swap(t);
    }

    std::size_t bytes() const
    {
        return keys.capacity() * sizeof(Key) + table.size() * 4 + node_off.capacity() * 8 + slots.capacity() * 4 +
               act_cops.capacity() * 8 + act_off.capacity() * 8 + mem.capacity() * 4;
    }
};

}  // namespace detail

using detail::Key;
using detail::kNone;

namespace {

using namespace detail;

struct Rules {
    int n = 0;
    int k = 0;
    bool see = false;
    bool monotone = false;
    bool delayed = false;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> nbr;
    std::vector<std::uint64_t> ball;

    Rules(const Graph& g, const GameSpec& spec)
        : n(g.order()), k(spec.cops), see(spec.seeing_wins()), monotone(spec.monotone()), delayed(spec.delayed())
    {
        if (n > 64) throw GraphError("solver supports at most 64 vertices");
        if (k > 8) throw GraphError("solver supports at most 8 cops");
        full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (Vertex v = 0; v < n; ++v) {
            nbr.push_back(g.closed_neighborhood(v).mask64());
            ball.push_back(g.closed_ball(v, spec.ell).mask64());
        }
    }

    std::array<int, 8> unpack(std::uint64_t cops) const
    {
        std::array<int, 8> out{};
        for (int i = 0; i < k; ++i) out[i] = static_cast<int>(cops >> (8 * i) & 0xff);
        return out;
    }

    std::uint64_t pack(std::array<int, 8> c) const
    {
        std::sort(c.begin(), c.begin() + k);
        std::uint64_t out = 0;
        for (int i = 0; i < k; ++i) out |= static_cast<std::uint64_t>(c[i]) << (8 * i);
        return out;
    }

    std::uint64_t pack(std::span<const Vertex> cops) const
    {
        std::array<int, 8> c{};
        for (int i = 0; i < k; ++i) c[i] = cops[i];
        return pack(c);
    }

    std::uint64_t occupied(std::uint64_t cops) const
    {
        auto c = unpack(cops);
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i) m |= std::uint64_t{1} << c[i];
        return m;
    }

    std::uint64_t sight(std::uint64_t cops) const
    {
        auto c = unpack(cops);
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i) m |= ball[c[i]];
        return m;
    }

    std::uint64_t closed(std::uint64_t set) const
    {
        std::uint64_t m = 0;
        for (; set; set &= set - 1) m |= nbr[std::countr_zero(set)];
        return m;
    }

    void moves(std::uint64_t cops, std::vector<std::uint64_t>& out) const
    {
        out.clear();
        const auto from = unpack(cops);
        std::array<int, 8> to{};
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                out.push_back(pack(to));
                return;
            }
            for (std::uint64_t m = nbr[from[i]]; m; m &= m - 1) {
                to[i] = std::countr_zero(m);
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    void placements(std::vector<std::uint64_t>& out) const
    {
        std::array<int, 8> c{};
        auto rec = [&](auto&& self, int i, int lo) -> void {
            if (i == k) {
                out.push_back(pack(c));
                return;
            }
            for (int v = lo; v < n; ++v) {
                c[i] = v;
                self(self, i + 1, v);
            }
        };
        rec(rec, 0, 0);
    }

    // Branches after the robber picks among `choices` while the cops (already
    // moved) sit at `cops`; appends the non-terminal cop-to-move nodes.
    void observe(std::uint64_t cops, std::uint64_t choices, std::uint64_t snap, std::vector<Key>& out) const
    {
        const std::uint64_t s = sight(cops);
        if (!see)
            for (std::uint64_t m = choices & s; m; m &= m - 1)
                out.push_back({cops, std::uint64_t{1} << std::countr_zero(m), 0, kCopVis});
        if (std::uint64_t unseen = choices & ~s) out.push_back({cops, unseen, monotone ? snap : 0, kCopInv});
    }
};

std::size_t multiset_count(int n, int k, std::size_t cap)
{
    // C(n + k - 1, k), saturating at cap.
    long double c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n + k - i) / i;
        if (c > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::size_t>(c + 0.5L);
}

struct Expansion {
    std::vector<std::uint64_t> act;
    std::vector<std::uint32_t> act_len;
    std::vector<Key> out;

    void clear()
    {
        act.clear();
        act_len.clear();
        out.clear();
    }
};

void expand(const Rules& R, const Key& key, Expansion& e, std::vector<std::uint64_t>& scratch)
{
    e.clear();
    switch (key.kind) {
    case kRoot:
        R.placements(scratch);
        for (std::uint64_t p : scratch) {
            e.act.push_back(p);
            e.act_len.push_back(1);
            e.out.push_back({p, 0, 0, kPlace});
        }
        return;
    case kPlace: {
        const std::uint64_t choices = R.full & ~R.occupied(key.cops);
        if (!choices) return;
        if (R.delayed)
            e.out.push_back({key.cops, choices, 0, kCopDel});
        else
            R.observe(key.cops, choices, choices & ~R.sight(key.cops), e.out);
        return;
    }
    case kCopInv:
    case kCopVis:
    case kCopDel:
        R.moves(key.cops, scratch);
        for (std::uint64_t c : scratch) {
            const std::uint64_t occ = R.occupied(c);
            const std::size_t before = e.out.size();
            if (key.kind == kCopVis) {
                if (!(key.set & occ)) e.out.push_back({c, key.set, 0, kRobVis});
            } else if (key.kind == kCopDel) {
                if (std::uint64_t surv = key.set & ~occ) e.out.push_back({c, surv, 0, kRobDel});
            } else {
                const std::uint64_t s = R.sight(c);
                const std::uint64_t rest = key.set & ~s;
                if (R.monotone && (rest & ~key.snap)) continue;
                if (!R.see)
                    for (std::uint64_t m = key.set & s & ~occ; m; m &= m - 1)
                        e.out.push_back({c, std::uint64_t{1} << std::countr_zero(m), 0, kRobVis});
                if (rest) e.out.push_back({c, rest, R.monotone ? rest : 0, kRobInv});
            }
            e.act.push_back(c);
            e.act_len.push_back(static_cast<std::uint32_t>(e.out.size() - before));
        }
        return;
    case kRobInv:
    case kRobVis: {
        const std::uint64_t moves = R.closed(key.set) & ~R.occupied(key.cops);
        R.observe(key.cops, moves, key.kind == kRobInv ? key.snap : R.full, e.out);
        return;
    }
    case kRobDel: {
        const std::uint64_t occ = R.occupied(key.cops);
        for (std::uint64_t m = key.set; m; m &= m - 1) {
            std::uint64_t next = R.nbr[std::countr_zero(m)] & ~occ;
            if (next) e.out.push_back({key.cops, next, 0, kCopDel});
        }
        return;
    }
    }
}

Key key_of(const Rules& R, const BeliefState& s)
{
    if (static_cast<int>(s.cops.size()) != R.k) throw std::invalid_argument("state has the wrong number of cops");
    Key k;
    k.cops = R.pack(s.cops);
    if (R.monotone && s.snapshot) k.snap = s.snapshot->mask64();
    switch (s.phase) {
    case Phase::Invisible:
        k.set = s.territory.mask64();
        k.kind = s.robber_to_move ? kRobInv : kCopInv;
        break;
    case Phase::Visible:
        k.set = std::uint64_t{1} << s.robber;
        k.snap = 0;
        k.kind = s.robber_to_move ? kRobVis : kCopVis;
        break;
    case Phase::Delayed:
        k.set = s.territory.mask64();
        k.kind = s.robber_to_move ? kRobDel : kCopDel;
        break;
    }
    return k;
}

BeliefState state_of(const Rules& R, const Key& k)
{
    BeliefState s;
    auto c = R.unpack(k.cops);
    s.cops.assign(c.begin(), c.begin() + R.k);
    s.robber_to_move = k.kind == kRobInv || k.kind == kRobVis || k.kind == kRobDel;
    switch (k.kind) {
    case kCopVis:
    case kRobVis:
        s.phase = Phase::Visible;
        s.robber = std::countr_zero(k.set);
        s.territory = VertexSet(R.n);
        break;
    case kCopDel:
    case kRobDel:
        s.phase = Phase::Delayed;
        s.territory = VertexSet::from_mask64(R.n, k.set);
        break;
    default:
        s.phase = Phase::Invisible;
        s.territory = VertexSet::from_mask64(R.n, k.set);
        if (R.monotone) s.snapshot = VertexSet::from_mask64(R.n, k.snap);
        break;
    }
    return s;
}

void set_threads(int workers)
{
    if (workers > 0) omp_set_num_threads(workers);
}

// Least fixpoint by level: AND nodes at level L-1 unlock OR nodes at L,
// which in turn unlock AND nodes at L.
void propagate(Arena& A)
{
    const std::size_t N = A.keys.size();
    const std::size_t nact = A.act_cops.size();
    std::vector<std::uint32_t> owner(nact);
    std::vector<std::uint32_t> unmet(N, 0);
    std::vector<std::uint32_t> act_unmet(nact);
    std::vector<std::uint64_t> rev_off(N + 1, 0);

    for (std::uint32_t v = 0; v < N; ++v) {
        if (is_or(A.keys[v].kind)) {
            for (std::uint64_t i = A.node_off[v]; i < A.node_off[v + 1]; ++i) {
                std::uint32_t a = A.slots[i];
                owner[a] = v;
                act_unmet[a] = static_cast<std::uint32_t>(A.act_off[a + 1] - A.act_off[a]);
                for (std::uint64_t j = A.act_off[a]; j < A.act_off[a + 1]; ++j) ++rev_off[A.mem[j] + 1];
            }
        } else {
            unmet[v] = static_cast<std::uint32_t>(A.node_off[v + 1] - A.node_off[v]);
            for (std::uint64_t i = A.node_off[v]; i < A.node_off[v + 1]; ++i) ++rev_off[A.slots[i] + 1];
        }
    }
    for (std::size_t i = 0; i < N; ++i) rev_off[i + 1] += rev_off[i];
    std::vector<std::uint32_t> rev(rev_off[N]);
    {
        std::vector<std::uint64_t> fill(rev_off.begin(), rev_off.end() - 1);
        for (std::uint32_t v = 0; v < N; ++v) {
            if (is_or(A.keys[v].kind)) {
                for (std::uint64_t i = A.node_off[v]; i < A.node_off[v + 1]; ++i) {
                    std::uint32_t a = A.slots[i];
                    for (std::uint64_t j = A.act_off[a]; j < A.act_off[a + 1]; ++j) rev[fill[A.mem[j]]++] = a;
                }
            } else {
                for (std::uint64_t i = A.node_off[v]; i < A.node_off[v + 1]; ++i) rev[fill[A.slots[i]]++] = v;
            }
        }
    }

    A.level.assign(N, kNone);
    A.choice.assign(N, kNone);
    std::vector<std::uint32_t> and_frontier;
    std::vector<std::uint32_t> or_seed;  // OR nodes with an action that wins outright
    for (std::uint32_t v = 0; v < N; ++v) {
        if (is_or(A.keys[v].kind)) {
            for (std::uint64_t i = A.node_off[v]; i < A.node_off[v + 1]; ++i)
                if (act_unmet[A.slots[i]] == 0) {
                    or_seed.push_back(v);
                    break;
                }
        } else if (unmet[v] == 0) {
            A.level[v] = 0;
            and_frontier.push_back(v);
        }
    }

    for (std::uint32_t L = 1; !and_frontier.empty() || (L == 1 && !or_seed.empty()); ++L) {
        std::vector<std::uint32_t> cand = L == 1 ? or_seed : std::vector<std::uint32_t>{};
#pragma omp parallel
        {
            std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 256) nowait
            for (std::size_t i = 0; i < and_frontier.size(); ++i) {
                const std::uint32_t x = and_frontier[i];
                for (std::uint64_t j = rev_off[x]; j < rev_off[x + 1]; ++j) {
                    const std::uint32_t a = rev[j];
                    if (std::atomic_ref<std::uint32_t>(act_unmet[a]).fetch_sub(1) == 1) local.push_back(owner[a]);
                }
            }
#pragma omp critical
            cand.insert(cand.end(), local.begin(), local.end());
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<std::uint32_t> won;
        for (std::uint32_t o : cand) {
            if (A.level[o] != kNone) continue;
            A.level[o] = L;
            for (std::uint64_t i = A.node_off[o]; i < A.node_off[o + 1]; ++i)
                if (act_unmet[A.slots[i]] == 0) {
                    A.choice[o] = A.slots[i];
                    break;
                }
            won.push_back(o);
        }

        std::vector<std::uint32_t> next;
#pragma omp parallel
        {
            std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 256) nowait
            for (std::size_t i = 0; i < won.size(); ++i) {
                const std::uint32_t o = won[i];
                for (std::uint64_t j = rev_off[o]; j < rev_off[o + 1]; ++j) {
                    const std::uint32_t y = rev[j];
                    if (std::atomic_ref<std::uint32_t>(unmet[y]).fetch_sub(1) == 1) local.push_back(y);
                }
            }
#pragma omp critical
            next.insert(next.end(), local.begin(), local.end());
        }
        std::sort(next.begin(), next.end());
        for (std::uint32_t y : next) A.level[y] = L;
        and_frontier.swap(next);
    }
}

}  // namespace

SolvedGame::SolvedGame() = default;
SolvedGame::SolvedGame(SolvedGame&&) noexcept = default;
SolvedGame& SolvedGame::operator=(SolvedGame&&) noexcept = default;
SolvedGame::~SolvedGame() = default;

SolvedGame solve(const Graph& g, const GameSpec& spec, const SolveOptions& options,
                 const std::optional<BeliefState>& root)
{
    SolvedGame out;
    out.g_ = g;
    out.spec_ = spec;
    const Rules R(g, spec);
    set_threads(options.workers);

    if (!root && multiset_count(R.n, R.k, options.max_states) > options.max_states) return out;

    auto A = std::make_unique<Arena>();
    A->root = A->intern(root ? key_of(R, *root) : Key{0, 0, 0, kRoot}).first;

    constexpr std::size_t kChunk = 1 << 15;
    std::vector<Expansion> buf(kChunk);
    std::size_t done = 0;
    bool over = false;
    while (done < A->keys.size() && !over) {
        const std::size_t layer_end = A->keys.size();
        out.stats_.frontier.push_back(layer_end - done);
        while (done < layer_end && !over) {
            const std::size_t hi = std::min(layer_end, done + kChunk);
#pragma omp parallel
            {
                std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 64)
                for (std::size_t i = done; i < hi; ++i) expand(R, A->keys[i], buf[i - done], scratch);
            }
            for (std::size_t i = done; i < hi; ++i) {
                const Expansion& e = buf[i - done];
                const std::size_t before = A->slots.size();
                if (is_or(A->keys[i].kind)) {
                    std::size_t at = 0;
                    for (std::size_t a = 0; a < e.act.size(); ++a) {
                        A->slots.push_back(static_cast<std::uint32_t>(A->act_cops.size()));
                        A->act_cops.push_back(e.act[a]);
                        for (std::uint32_t j = 0; j < e.act_len[a]; ++j) A->mem.push_back(A->intern(e.out[at++]).first);
                        A->act_off.push_back(A->mem.size());
                    }
                } else {
                    for (const Key& k : e.out) A->slots.push_back(A->intern(k).first);
                    std::sort(A->slots.begin() + before, A->slots.end());
                    A->slots.erase(std::unique(A->slots.begin() + before, A->slots.end()), A->slots.end());
                }
                A->node_off.push_back(A->slots.size());
            }
            done = hi;
            // Propagation roughly doubles the edge storage.
            if (A->keys.size() > options.max_states || 2 * A->bytes() + A->keys.size() * 24 > options.max_bytes)
                over = true;
        }
    }
    for (const Key& k : A->keys) (is_or(k.kind) && k.kind != kRoot ? out.stats_.cop_states : out.stats_.robber_states)++;
    out.stats_.actions = A->act_cops.size();
    if (over) return out;

    propagate(*A);
    const std::uint32_t lv = A->level[A->root];
    out.winner_ = lv == kNone ? Winner::Robber : Winner::Cops;
    if (lv != kNone) {
        const bool fresh = A->keys[A->root].kind == kRoot;
        out.stats_.rounds = static_cast<int>(fresh ? lv - 1 : lv);
    }
    // Keep only what lookups need.
    std::vector<std::uint64_t>().swap(A->act_off);
    std::vector<std::uint32_t>().swap(A->mem);
    out.arena_ = std::move(A);
    return out;
}

std::optional<std::vector<Vertex>> SolvedGame::placement() const
{
    if (winner_ != Winner::Cops || arena_->keys[arena_->root].kind != kRoot) return std::nullopt;
    const Rules R(g_, spec_);
    auto c = R.unpack(arena_->act_cops[arena_->choice[arena_->root]]);
    return std::vector<Vertex>(c.begin(), c.begin() + R.k);
}

std::optional<int> SolvedGame::distance(const BeliefState& state) const
{
    if (!arena_) return std::nullopt;
    const Rules R(g_, spec_);
    std::uint32_t id = arena_->find(key_of(R, state));
    if (id == kNone || arena_->level[id] == kNone) return std::nullopt;
    return static_cast<int>(arena_->level[id]);
}

std::optional<std::vector<Vertex>> SolvedGame::cop_action(const BeliefState& state) const
{
    if (!arena_ || state.robber_to_move) return std::nullopt;
    const Rules R(g_, spec_);
    std::uint32_t id = arena_->find(key_of(R, state));
    if (id == kNone || arena_->choice[id] == kNone) return std::nullopt;
    auto c = R.unpack(arena_->act_cops[arena_->choice[id]]);
    return std::vector<Vertex>(c.begin(), c.begin() + R.k);
}

namespace {

// Level of the cop-to-move node a robber choice leads to; terminal = 0,
// unknown or robber-winning = max.
std::uint64_t branch_value(const Arena& A, const Rules& R, std::uint64_t cops, Vertex v, std::uint64_t unseen,
                           std::uint64_t snap)
{
    const std::uint64_t bit = std::uint64_t{1} << v;
    Key k;
    if (R.sight(cops) & bit) {
        if (R.see) return 0;
        k = {cops, bit, 0, kCopVis};
    } else {
        k = {cops, unseen, R.monotone ? snap : 0, kCopInv};
    }
    std::uint32_t id = A.find(k);
    if (id == kNone || A.level[id] == kNone) return std::numeric_limits<std::uint64_t>::max();
    return A.level[id];
}

Vertex farthest(const Graph& g, std::span<const Vertex> cops, std::uint64_t options)
{
    Vertex best = -1;
    int far = -1;
    for (; options; options &= options - 1) {
        Vertex v = std::countr_zero(options);
        int d = g.dist(v, cops);
        if (d > far) {
            far = d;
            best = v;
        }
    }
    return best;
}

}  // namespace

Vertex SolvedGame::robber_placement(std::span<const Vertex> cops) const
{
    const Rules R(g_, spec_);
    const std::uint64_t c = R.pack(cops);
    const std::uint64_t choices = R.full & ~R.occupied(c);
    if (!choices) throw std::invalid_argument("no free vertex for the robber");
    if (R.delayed || !arena_) return farthest(g_, cops, choices);
    const std::uint64_t unseen = choices & ~R.sight(c);
    Vertex best = -1;
    std::uint64_t value = 0;
    for (std::uint64_t m = choices; m; m &= m - 1) {
        Vertex v = std::countr_zero(m);
        std::uint64_t val = branch_value(*arena_, R, c, v, unseen, unseen);
        if (best < 0 || val > value) {
            best = v;
            value = val;
        }
    }
    return best;
}

Vertex SolvedGame::robber_move(const BeliefState& state, Vertex robber) const
{
    const Rules R(g_, spec_);
    const Key k = key_of(R, state);
    const std::uint64_t occ = R.occupied(k.cops);
    const std::uint64_t options = R.nbr[robber] & ~occ;
    if (!options) throw std::invalid_argument("robber has no legal move");
    if (R.delayed || !arena_) return farthest(g_, state.cops, options);
    const std::uint64_t moves =
        (state.phase == Phase::Visible ? R.nbr[robber] : R.closed(k.set)) & ~occ;
    const std::uint64_t unseen = moves & ~R.sight(k.cops);
    const std::uint64_t snap = state.phase == Phase::Invisible ? k.snap : R.full;
    Vertex best = -1;
    std::uint64_t value = 0;
    for (std::uint64_t m = options; m; m &= m - 1) {
        Vertex v = std::countr_zero(m);
        std::uint64_t val = branch_value(*arena_, R, k.cops, v, unseen, snap);
        if (best < 0 || val > value) {
            best = v;
            value = val;
        }
    }
    return best;
}

std::vector<std::pair<std::string, std::vector<Vertex>>> SolvedGame::policy_table() const
{
    std::vector<std::pair<std::string, std::vector<Vertex>>> out;
    if (!arena_) return out;
    const Rules R(g_, spec_);
    for (std::uint32_t id = 0; id < arena_->keys.size(); ++id) {
        const Key& k = arena_->keys[id];
        if (!is_or(k.kind) || k.kind == kRoot || arena_->choice[id] == kNone) continue;
        auto c = R.unpack(arena_->act_cops[arena_->choice[id]]);
        out.emplace_back(encode(state_of(R, k)), std::vector<Vertex>(c.begin(), c.begin() + R.k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string encode(const BeliefState& s)
{
    auto join = [](const std::vector<Vertex>& vs) {
        std::string t;
        for (std::size_t i = 0; i < vs.size(); ++i) t += (i ? "." : "") + std::to_string(vs[i]);
        return t;
    };
    std::string out = "c=" + join(s.cops) + ";p=";
    switch (s.phase) {
    case Phase::Invisible: out += "I;s=" + join(s.territory.members()); break;
    case Phase::Visible: out += "V;s=" + std::to_string(s.robber); break;
    case Phase::Delayed: out += "D;s=" + join(s.territory.members()); break;
    }
    if (s.snapshot) out += ";m=" + join(s.snapshot->members());
    out += s.robber_to_move ? ";t=r" : ";t=c";
    return out;
}

std::vector<Vertex> SolverCops::place(const Graph&, const GameSpec&)
{
    auto p = game_.placement();
    if (!p) throw std::logic_error("no winning placement");
    return *p;
}

std::vector<Vertex> SolverCops::move(const Graph&, const GameSpec&, const BeliefState& state, int)
{
    auto a = game_.cop_action(state);
    if (!a) throw std::logic_error("state outside the winning region: " + encode(state));
    return *a;
}

Vertex SolverRobber::place(const Graph&, const GameSpec&, std::span<const Vertex> cops)
{
    return game_.robber_placement(cops);
}

Vertex SolverRobber::move(const Graph&, const GameSpec&, const BeliefState& state, Vertex robber, int)
{
    return game_.robber_move(state, robber);
}

}  // namespace copvis
