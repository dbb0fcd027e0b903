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

#include "copvis/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace copvis {

namespace {

bool comment_or_blank(const std::string& line)
{
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

std::string slurp(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_object(const std::string& text)
{
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

Json parse_object(const std::string& text, const char* what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw GraphError(std::string(what) + ": " + e.what());
    }
}

std::string_view phase_name(Phase p)
{
    switch (p) {
    case Phase::Invisible: return "invisible";
    case Phase::Visible: return "visible";
    case Phase::Delayed: return "delayed";
    }
    return "?";
}

}  // namespace

Graph read_graph(std::istream& in, Labels* labels)
{
    const std::string text = slurp(in);
    if (is_object(text)) {
        auto j = parse_object(text, "graph");
        try {
            std::vector<Edge> edges;
            for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            if (labels && j.contains("labels"))
                for (const auto& [k, v] : j["labels"].items()) (*labels)[k] = v.get<std::vector<Vertex>>();
            return Graph::build(j.at("n").get<int>(), edges);
        } catch (const Json::exception& e) {
            throw GraphError(std::string("graph: ") + e.what());
        }
    }
    std::istringstream lines(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(lines, line)) {
        if (comment_or_blank(line)) {
            std::istringstream ls(line);
            std::string hash, word, name;
            if (labels && ls >> hash >> word >> name && hash == "#" && word == "label") {
                auto& out = (*labels)[name];
                for (Vertex v; ls >> v;) out.push_back(v);
            }
            continue;
        }
        std::istringstream ls(line);
        int a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw GraphError("graph: expected two integers in '" + line + "'");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0) throw GraphError("graph: negative header");
        } else {
            edges.push_back({a, b});
        }
    }
    if (n < 0) throw GraphError("graph: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw GraphError("graph: header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::build(n, edges);
}

Graph read_graph_file(const std::string& path, Labels* labels)
{
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_graph(in, labels);
}

std::string write_graph(const Graph& g, const Labels& labels)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    for (const auto& [name, vs] : labels) {
        out << "# label " << name;
        for (Vertex v : vs) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Script read_script(std::istream& in)
{
    const std::string text = slurp(in);
    Script s;
    if (is_object(text)) {
        auto j = parse_object(text, "script");
        try {
            s.walks = j.at("walks").get<std::vector<std::vector<Vertex>>>();
        } catch (const Json::exception& e) {
            throw GraphError(std::string("script: ") + e.what());
        }
        return s;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::vector<Vertex> walk;
        for (Vertex v; ls >> v;) walk.push_back(v);
        if (!ls.eof()) throw GraphError("script: bad vertex in '" + line + "'");
        s.walks.push_back(std::move(walk));
    }
    if (s.walks.empty()) throw GraphError("script: no walks");
    return s;
}

Script read_script_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_script(in);
}

std::string write_script(const Script& s)
{
    std::ostringstream out;
    for (const auto& w : s.walks) {
        for (std::size_t t = 0; t < w.size(); ++t) out << (t ? " " : "") << w[t];
        out << '\n';
    }
    return out.str();
}

Json to_json(const Graph& g, const Labels& labels)
{
    Json j;
    j["n"] = g.order();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!labels.empty()) j["labels"] = labels;
    j["hash"] = graph_hash(g);
    return j;
}

Json to_json(const GameSpec& spec)
{
    return {{"variant", std::string(to_string(spec.variant))},
            {"requested", std::string(to_string(spec.requested))},
            {"ell", spec.ell},
            {"cops", spec.cops}};
}

Json to_json(const VertexSet& s) { return s.members(); }

Json to_json(const BeliefState& s)
{
    Json j{{"cops", s.cops}, {"phase", phase_name(s.phase)}};
    if (s.phase == Phase::Visible)
        j["robber"] = s.robber;
    else
        j["territory"] = to_json(s.territory);
    if (s.snapshot) j["snapshot"] = to_json(*s.snapshot);
    j["to_move"] = s.robber_to_move ? "robber" : "cops";
    j["key"] = encode(s);
    return j;
}

Json to_json(const CleaningReport& r)
{
    Json j;
    j["rounds"] = r.territory.size();
    j["territory"] = Json::array();
    for (const auto& t : r.territory) j["territory"].push_back(to_json(t));
    j["seen"] = r.seen;
    j["seen_guaranteed_at"] = r.seen_guaranteed_at ? Json(*r.seen_guaranteed_at) : Json();
    j["cleaned_at"] = r.cleaned_at ? Json(*r.cleaned_at) : Json();
    j["monotone"] = r.monotone;
    auto events = [](const std::vector<CleaningReport::Event>& es) {
        Json a = Json::array();
        for (const auto& e : es) a.push_back({{"vertex", e.vertex}, {"round", e.round}});
        return a;
    };
    j["recontaminations"] = events(r.recontaminations);
    j["located"] = events(r.located);
    return j;
}

Json to_json(const Trace& t)
{
    Json j{{"outcome", std::string(to_string(t.outcome))}, {"rounds", t.rounds}};
    j["log"] = Json::array();
    for (const auto& r : t.log)
        j["log"].push_back({{"round", r.round}, {"cops", r.cops}, {"robber", r.robber}, {"observed", to_json(r.observed)}});
    return j;
}

Json to_json(const RankCertificate& c)
{
    Json j{{"rank", c.rank}, {"hub", c.hub}};
    j["branches"] = Json::array();
    for (const auto& b : c.branches) j["branches"].push_back({{"path", b.path}, {"child", to_json(b.child)}});
    return j;
}

Json to_json(const Profile& p)
{
    Json j{{"classical", p.classical}, {"zero", p.zero},         {"domination", p.domination},
           {"radius", p.radius},       {"diameter", p.diameter}, {"delayed", p.delayed ? Json(*p.delayed) : Json()}};
    j["per_ell"] = Json::array();
    for (const auto& e : p.per_ell)
        j["per_ell"].push_back({{"ell", e.ell},
                                {"capture", e.capture},
                                {"see", e.see},
                                {"monotone", e.monotone ? Json(*e.monotone) : Json()},
                                {"domination", e.domination}});
    j["violations"] = inequality_violations(p);
    return j;
}

Json to_json(const Script& s) { return {{"cops", s.cops()}, {"rounds", s.rounds()}, {"walks", s.walks}}; }

Json solve_json(const SolvedGame& game, std::optional<double> time_ms)
{
    const auto& st = game.stats();
    Json j{{"graph", graph_hash(game.graph())},
           {"spec", to_json(game.spec())},
           {"winner", std::string(to_string(game.winner()))},
           {"rounds", st.rounds ? Json(*st.rounds) : Json()}};
    if (auto p = game.placement()) j["placement"] = *p;
    j["states"] = {{"cop", st.cop_states}, {"robber", st.robber_states}, {"actions", st.actions}};
    j["frontier"] = st.frontier;
    if (time_ms) j["time_ms"] = *time_ms;
    return j;
}

Json policy_json(const SolvedGame& game)
{
    auto table = game.policy_table();
    std::sort(table.begin(), table.end());
    Json rows = Json::array();
    for (const auto& [key, action] : table) rows.push_back({{"state", key}, {"action", action}});
    return {{"graph", graph_hash(game.graph())}, {"spec", to_json(game.spec())}, {"policy", rows}};
}

std::string to_dot(const Graph& g, std::span<const Vertex> cops, const VertexSet* territory, Vertex robber,
                   const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::string> attrs;
        const auto k = std::count(cops.begin(), cops.end(), v);
        if (k) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=lightblue");
            if (k > 1) attrs.push_back("xlabel=\"x" + std::to_string(k) + "\"");
        } else if (territory && territory->contains(v)) {
            attrs.push_back("style=dashed");
        }
        if (v == robber) attrs.push_back("shape=doublecircle");
        out << "  " << v;
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? "," : "") << attrs[i];
            out << ']';
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string report_dot(const Graph& g, const Script& s, const CleaningReport& r)
{
    std::string out;
    for (int t = 0; t < static_cast<int>(r.territory.size()) && t < s.rounds(); ++t) {
        auto cops = s.at(t);
        out += to_dot(g, cops, &r.territory[t], -1, "round_" + std::to_string(t));
    }
    return out;
}

}  // namespace copvis
