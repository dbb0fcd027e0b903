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

#include <algorithm>
#include <vector>

#include "copvis/graph.hpp"

namespace copvis {

/**
 * Witness that a tree contains a member of the recursive hub family of
 * rank k: a hub with three branches, each a path of exactly 2*ell+2
 * vertices leaving the hub and a rank k-1 witness hanging beyond the path
 * end. A rank 1 witness is a single vertex (the hub).
 */
struct RankCertificate {
    struct Branch;

    int rank = 1;
    Vertex hub = 0;
    std::vector<Branch> branches;

    /// Every vertex used by the witness, hub and paths, recursively; sorted,
    /// each once (a path end r also belongs to the child witness).
    std::vector<Vertex> vertices() const;
};

struct RankCertificate::Branch {
    /// Path vertices in order leaving the hub (hub excluded); back() is r.
    std::vector<Vertex> path;
    RankCertificate child;
};

inline std::vector<Vertex> RankCertificate::vertices() const
{
    std::vector<Vertex> out{hub};
    for (const auto& b : branches) {
        out.insert(out.end(), b.path.begin(), b.path.end());
        auto sub = b.child.vertices();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace copvis
