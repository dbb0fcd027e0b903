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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "copvis/certificate.hpp"
#include "copvis/engine.hpp"
#include "copvis/graph.hpp"
#include "copvis/solver.hpp"
#include "json.hpp"

namespace copvis {

using Json = nlohmann::ordered_json;
using Labels = std::map<std::string, std::vector<Vertex>>;

/**
 * Graph text: "n m" then m lines "u v", 0-based. Lines starting with '#'
 * are comments; "# label <name> v..." names designated vertices. A
 * document starting with '{' is read as {"n": int, "edges": [[u, v], ...]}.
 * Throws GraphError on malformed input.
 */
Graph read_graph(std::istream& in, Labels* labels = nullptr);
Graph read_graph_file(const std::string& path, Labels* labels = nullptr);
std::string write_graph(const Graph& g, const Labels& labels = {});

/**
 * Script text: one row per cop listing its vertex for each round, blank
 * and '#' lines skipped. A document starting with '{' is read as
 * {"walks": [[...], ...]}. Walk lengths are checked by validate_script.
 */
Script read_script(std::istream& in);
Script read_script_file(const std::string& path);
std::string write_script(const Script& s);

Json to_json(const Graph& g, const Labels& labels = {});
Json to_json(const GameSpec& spec);
Json to_json(const VertexSet& s);
Json to_json(const BeliefState& s);
Json to_json(const CleaningReport& r);
Json to_json(const Trace& t);
Json to_json(const RankCertificate& c);
Json to_json(const Profile& p);
Json to_json(const Script& s);
/// Winner, rounds and state counts; time_ms only when given.
Json solve_json(const SolvedGame& game, std::optional<double> time_ms = std::nullopt);
/// Every winning cop-to-move state with its action, sorted by key.
Json policy_json(const SolvedGame& game);

/// DOT for one round: cops filled, territory dashed, robber doubled.
std::string to_dot(const Graph& g, std::span<const Vertex> cops, const VertexSet* territory = nullptr,
                   Vertex robber = -1, const std::string& name = "G");
/// One DOT graph per round of a cleaning run, concatenated.
std::string report_dot(const Graph& g, const Script& s, const CleaningReport& r);

}  // namespace copvis
