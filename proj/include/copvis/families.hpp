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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copvis/certificate.hpp"
#include "copvis/graph.hpp"

namespace copvis {

enum class FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Spider,
    TFamily,
    SubdividedBinary,
    RandomTree,
    RandomChordal,
    RandomConnected,
    RandomCopWin,
    Petersen,
};

struct FamilyRecipe {
    FamilyKind kind = FamilyKind::Path;
    /// Path/Cycle/Complete/random kinds: {n}; CompleteBipartite: {m, n};
    /// Spider: leg lengths.
    std::vector<int> sizes;
    int k = 1;
    int ell = 1;
    /// TFamily: for level j (index j-2) the child-local vertex used as the
    /// attachment r_i; -1 or absent means the child's hub.
    std::vector<int> attachments;
    int depth = 0;
    int subdivisions = 0;
    /// RandomConnected: extra-edge probability. RandomChordal/RandomCopWin:
    /// probability of growing the attachment set.
    double density = 0.3;
    std::uint64_t seed = 0;
};

/// A generated graph with its designated vertices.
struct Family {
    std::string name;
    Graph graph;
    std::map<std::string, std::vector<Vertex>> labels;
    std::optional<RankCertificate> certificate;
};

/// Throws GraphError on parameters out of range.
Family generate(const FamilyRecipe& recipe);

/**
 * Recipe strings: "path:5", "cycle:6", "complete:4", "bipartite:2,3",
 * "spider:4,4,4", "tfamily:k=2,ell=1[,attach=0;3]", "subdivided:3,3",
 * "randtree:n=10,seed=3", "randchordal:n=9,seed=1[,p=0.5]",
 * "randconnected:n=8,seed=2[,p=0.3]", "randcopwin:n=8,seed=4[,p=0.5]",
 * "petersen".
 */
FamilyRecipe parse_recipe(std::string_view text);

/// Vertices of the subdivided edge between two original binary-tree nodes,
/// listed from the parent side (both endpoints excluded).
std::vector<Vertex> subdivided_edge_path(int depth, int subdivisions, int child_heap_index);

}  // namespace copvis
