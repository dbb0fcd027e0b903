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

#include "copvis/certificate.hpp"
#include "copvis/graph.hpp"

namespace copvis {

struct TreeRank {
    int rank = 1;
    RankCertificate certificate;
};

/**
 * Largest k such that the tree contains a hub-family witness of rank k for
 * visibility ell. Memoised over subtrees. Throws GraphError on a non-tree.
 */
TreeRank tree_rank(const Graph& tree, int ell);

/// Structural check of a witness, recursively; no exceptions.
bool verify_certificate(const Graph& tree, const RankCertificate& cert, int ell);

struct HeightBound {
    /// ceil(h / (2 ell + 2)) with h the minimum eccentricity.
    int centre_height = 1;
    /// ceil(d / (2 ell + 2)) with d the height of the tree hung from an end
    /// of a longest path, i.e. the diameter.
    int rooted_height = 1;
};

HeightBound height_bound(const Graph& tree, int ell);

}  // namespace copvis
