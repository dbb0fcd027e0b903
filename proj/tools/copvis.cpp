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

// copvis command-line front end.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "copvis/families.hpp"
#include "copvis/io.hpp"
#include "copvis/solver.hpp"
#include "copvis/strategies.hpp"
#include "copvis/treerank.hpp"

using namespace copvis;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

struct Options {
    std::string graph_path;
    std::string recipe;
    int ell = 1;
    int cops = 0;
    std::string variant = "capture";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t budget = 20'000'000;
    std::string format = "text";
    int workers = 0;
    bool timing = false;

    // Per-command extras.
    std::string script;
    std::string dot;
    std::string policy;
    std::string robber = "solver";
    std::string strategy = "solver";
    int rounds = 200;
    bool monotone = false;
    bool delayed = false;
    std::string target = "gap";
    int max_n = 8;
};

struct Input {
    Graph graph;
    Labels labels;
    std::optional<Family> family;
};

Input load(const Options& o)
{
    if (o.graph_path.empty() == o.recipe.empty()) throw GraphError("give exactly one of --graph and --recipe");
    Input in;
    if (!o.recipe.empty()) {
        in.family = generate(parse_recipe(o.recipe));
        in.graph = in.family->graph;
        in.labels = in.family->labels;
    } else {
        in.graph = read_graph_file(o.graph_path, &in.labels);
    }
    return in;
}

SolveOptions solve_options(const Options& o)
{
    SolveOptions s;
    s.max_states = o.budget;
    s.workers = o.workers;
    return s;
}

bool json_out(const Options& o) { return o.format == "json" || o.format == "structured"; }

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw GraphError("cannot write " + o.out);
    f << text;
}

void emit(const Options& o, const Json& j, const std::string& text)
{
    emit(o, json_out(o) ? j.dump(2) + "\n" : text);
}

std::string join(std::span<const Vertex> vs)
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct RandomRobber : RobberPolicy {
    std::mt19937_64 rng;
    explicit RandomRobber(std::uint64_t seed) : rng(seed) {}
    Vertex place(const Graph& g, const GameSpec&, std::span<const Vertex> cops) override
    {
        std::vector<Vertex> free;
        for (Vertex v = 0; v < g.order(); ++v)
            if (std::find(cops.begin(), cops.end(), v) == cops.end()) free.push_back(v);
        if (free.empty()) free.push_back(0);
        return free[rng() % free.size()];
    }
    Vertex move(const Graph& g, const GameSpec&, const BeliefState& s, Vertex r, int) override
    {
        std::vector<Vertex> opts{r};
        for (Vertex u : g.neighbors(r))
            if (std::find(s.cops.begin(), s.cops.end(), u) == s.cops.end()) opts.push_back(u);
        return opts[rng() % opts.size()];
    }
};

int cmd_generate(const Options& o)
{
    if (o.recipe.empty()) throw GraphError("generate needs --recipe");
    auto in = load(o);
    Json j = to_json(in.graph, in.labels);
    j["name"] = in.family->name;
    if (in.family->certificate) j["certificate"] = to_json(*in.family->certificate);
    emit(o, j, write_graph(in.graph, in.labels));
    return kOk;
}

int cmd_analyze(const Options& o)
{
    auto in = load(o);
    const Graph& g = in.graph;
    Json j{{"graph", graph_hash(g)}, {"n", g.order()}, {"m", g.size()}, {"connected", g.connected()}};
    std::ostringstream t;
    t << std::boolalpha << "n " << g.order() << "  m " << g.size() << "  hash " << graph_hash(g) << '\n';
    if (!g.connected()) {
        t << "disconnected\n";
        emit(o, j, t.str());
        return kOk;
    }
    auto m = metrics(g);
    const bool chordal = chordal_peo(g).has_value();
    const bool copwin = copwin_ordering(g).has_value();
    auto cuts = cut_vertices(g);
    j["radius"] = m.radius;
    j["diameter"] = m.diameter;
    j["centre"] = m.centre;
    j["tree"] = g.is_tree();
    if (m.height) j["height"] = *m.height;
    j["chordal"] = chordal;
    j["copwin"] = copwin;
    j["cut_vertices"] = cuts;
    t << "radius " << m.radius << "  diameter " << m.diameter << "  centre " << join(m.centre) << '\n';
    t << "tree " << g.is_tree() << "  chordal " << chordal << "  cop-win " << copwin << '\n';
    t << "cut vertices: " << (cuts.empty() ? "none" : join(cuts)) << '\n';
    if (g.order() <= 20) {
        const int gamma = k_domination_number(g, 1);
        const int gl = k_domination_number(g, o.ell);
        j["domination"] = gamma;
        j["ell_domination"] = {{"ell", o.ell}, {"value", gl}};
        t << "domination " << gamma << "  " << o.ell << "-domination " << gl << '\n';
    }
    emit(o, j, t.str());
    return kOk;
}

int cmd_solve(const Options& o)
{
    auto in = load(o);
    const Variant v = parse_variant(o.variant);
    const auto t0 = std::chrono::steady_clock::now();
    if (o.cops <= 0) {
        auto k = cop_number(in.graph, v, o.ell, solve_options(o));
        const auto probe = GameSpec::make(in.graph, v, o.ell, 1);
        Json j{{"graph", graph_hash(in.graph)},
               {"spec", {{"variant", std::string(to_string(probe.variant))},
                         {"requested", std::string(to_string(v))},
                         {"ell", probe.ell}}},
               {"number", k ? Json(*k) : Json()}};
        if (o.timing) j["time_ms"] = ms_since(t0);
        emit(o, j, k ? "number " + std::to_string(*k) + "\n" : std::string("INCONCLUSIVE\n"));
        return k ? kOk : kInconclusive;
    }
    auto spec = GameSpec::make(in.graph, v, o.ell, o.cops);
    auto game = solve(in.graph, spec, solve_options(o));
    auto j = solve_json(game, o.timing ? std::optional<double>(ms_since(t0)) : std::nullopt);
    std::ostringstream t;
    t << to_string(game.winner());
    if (game.stats().rounds) t << " in " << *game.stats().rounds << " rounds";
    t << "  (" << game.stats().cop_states + game.stats().robber_states << " states)\n";
    if (auto p = game.placement()) t << "placement " << join(*p) << '\n';
    emit(o, j, t.str());
    if (!o.policy.empty()) {
        std::ofstream f(o.policy);
        if (!f) throw GraphError("cannot write " + o.policy);
        f << policy_json(game).dump(2) << '\n';
    }
    return game.winner() == Winner::Inconclusive ? kInconclusive : kOk;
}

int cmd_profile(const Options& o)
{
    auto in = load(o);
    ProfileOptions po;
    po.ells.clear();
    for (int l = 1; l <= std::max(1, o.ell); ++l) po.ells.push_back(l);
    po.monotone = o.monotone;
    po.delayed = o.delayed;
    po.solve = solve_options(o);
    Profile p;
    try {
        p = profile(in.graph, po);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        emit(o, Json{{"graph", graph_hash(in.graph)}, {"error", e.what()}}, std::string("INCONCLUSIVE: ") + e.what() + "\n");
        return kInconclusive;
    }
    Json j{{"graph", graph_hash(in.graph)}, {"profile", to_json(p)}};
    std::ostringstream t;
    t << "c " << p.classical << "  c_0 " << p.zero << "  gamma " << p.domination << "  radius " << p.radius
      << "  diameter " << p.diameter << "  c_t " << opt(p.delayed) << '\n';
    for (const auto& e : p.per_ell)
        t << "ell " << e.ell << ": c " << e.capture << "  c' " << e.see << "  mc " << opt(e.monotone) << "  gamma "
          << e.domination << '\n';
    for (const auto& v : inequality_violations(p)) t << "VIOLATION " << v << '\n';
    emit(o, j, t.str());
    return kOk;
}

void certificate_text(std::ostream& t, const RankCertificate& c, int depth)
{
    t << std::string(2 * depth, ' ') << "rank " << c.rank << " hub " << c.hub << '\n';
    for (const auto& b : c.branches) {
        t << std::string(2 * depth + 2, ' ') << "path " << join(b.path) << '\n';
        certificate_text(t, b.child, depth + 2);
    }
}

int cmd_rank(const Options& o)
{
    auto in = load(o);
    auto r = tree_rank(in.graph, o.ell);
    auto hb = height_bound(in.graph, o.ell);
    const bool ok = verify_certificate(in.graph, r.certificate, o.ell);
    Json j{{"graph", graph_hash(in.graph)},
           {"ell", o.ell},
           {"rank", r.rank},
           {"certificate", to_json(r.certificate)},
           {"verified", ok},
           {"height_bound", {{"centre", hb.centre_height}, {"rooted", hb.rooted_height}}}};
    std::ostringstream t;
    t << "rank " << r.rank << (ok ? "" : "  (certificate FAILED)") << '\n';
    certificate_text(t, r.certificate, 0);
    t << "height bound: centre " << hb.centre_height << "  rooted " << hb.rooted_height << '\n';
    emit(o, j, t.str());
    return ok ? kOk : kInputError;
}

Script builtin_script(const Options& o, const Input& in)
{
    const std::string& s = o.script;
    if (s == "tell_2cop") return t_ell_scripts(in.graph, o.ell).two_cop;
    if (s == "tell_3cop") return t_ell_scripts(in.graph, o.ell).three_cop_monotone;
    if (s == "tree1") return tree_one_visibility_script(in.graph);
    if (s == "tfamily") {
        if (!in.family) throw GraphError("the tfamily script needs --recipe tfamily:...");
        return t_family_script(*in.family);
    }
    if (s == "solver") {
        if (o.cops <= 0) throw GraphError("the solver script needs --cops");
        auto game = solve(in.graph, GameSpec::make(in.graph, Variant::See, o.ell, o.cops), solve_options(o));
        auto script = script_from_see_policy(game);
        if (!script) throw std::runtime_error("no winning search with " + std::to_string(o.cops) + " cops");
        return *script;
    }
    return read_script_file(s);
}

int cmd_verify(const Options& o)
{
    auto in = load(o);
    if (o.script.empty()) throw GraphError("verify needs --script");
    Script s;
    try {
        s = builtin_script(o, in);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        emit(o, Json{{"error", e.what()}}, std::string("INCONCLUSIVE: ") + e.what() + "\n");
        return kInconclusive;
    }
    validate_script(in.graph, s);
    auto spec = GameSpec::make(in.graph, Variant::See, o.ell, s.cops());
    auto rep = simulate_script(in.graph, spec, s);
    Json j{{"graph", graph_hash(in.graph)}, {"spec", to_json(spec)}, {"script", to_json(s)}, {"report", to_json(rep)}};
    std::ostringstream t;
    t << s.cops() << " cops, " << s.rounds() << " rounds\n";
    if (rep.cleaned_at)
        t << "cleaned at round " << *rep.cleaned_at << '\n';
    else if (rep.seen_guaranteed_at)
        t << "robber seen by round " << *rep.seen_guaranteed_at << '\n';
    else
        t << "NOT cleaned: " << rep.territory.back().size() << " vertices unseen\n";
    t << "monotone=" << (rep.monotone ? "true" : "false") << '\n';
    for (const auto& e : rep.recontaminations) t << "recontaminated " << e.vertex << " in round " << e.round << '\n';
    emit(o, j, t.str());
    if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f) throw GraphError("cannot write " + o.dot);
        f << report_dot(in.graph, s, rep);
    }
    return rep.seen_guaranteed_at ? kOk : kInputError;
}

int cmd_simulate(const Options& o)
{
    auto in = load(o);
    const Graph& g = in.graph;
    const Variant v = parse_variant(o.variant);
    std::unique_ptr<CopPolicy> cops;
    std::optional<SolvedGame> game;
    int k = o.cops;
    if (o.strategy == "shadow") {
        auto sc = std::make_unique<ShadowCapture>(g, o.ell, solve_options(o));
        k = sc->cops();
        cops = std::move(sc);
    } else if (o.strategy == "solver") {
        if (k <= 0) {
            auto n = cop_number(g, v, o.ell, solve_options(o));
            if (!n) {
                emit(o, Json{{"error", "cop number inconclusive"}}, "INCONCLUSIVE\n");
                return kInconclusive;
            }
            k = *n;
        }
    } else {
        throw GraphError("unknown strategy '" + o.strategy + "'");
    }
    auto spec = GameSpec::make(g, v, o.ell, k);
    if (o.strategy == "solver" || o.robber == "solver") {
        game = solve(g, spec, solve_options(o));
        if (game->winner() == Winner::Inconclusive) {
            emit(o, Json{{"error", "solve inconclusive"}}, "INCONCLUSIVE\n");
            return kInconclusive;
        }
    }
    if (!cops) {
        if (game->winner() != Winner::Cops) throw GraphError(std::to_string(k) + " cops cannot win this game");
        cops = std::make_unique<SolverCops>(*game);
    }
    std::unique_ptr<RobberPolicy> robber;
    if (o.robber == "solver")
        robber = std::make_unique<SolverRobber>(*game);
    else if (o.robber == "random")
        robber = std::make_unique<RandomRobber>(o.seed);
    else
        throw GraphError("unknown robber '" + o.robber + "'");
    auto tr = play_match(g, spec, *cops, *robber, o.rounds);
    Json j{{"graph", graph_hash(g)}, {"spec", to_json(spec)}, {"trace", to_json(tr)}};
    std::ostringstream t;
    for (const auto& r : tr.log) t << "round " << r.round << ": cops " << join(r.cops) << "  robber " << r.robber << '\n';
    t << to_string(tr.outcome) << " after " << tr.rounds << " rounds\n";
    emit(o, j, t.str());
    return kOk;
}

int cmd_witness(const Options& o)
{
    ProfileOptions po;
    po.ells = {1};
    po.solve = solve_options(o);
    std::function<bool(const Graph&, const Profile&)> accept;
    std::function<bool(const Graph&)> prefilter;
    std::string kind;
    std::vector<double> densities{0.3};
    if (o.target == "gap") {
        // Cop-win, one cop finds the robber at distance one, two are needed to catch it.
        kind = "randcopwin";
        densities = {0.55, 0.6, 0.65, 0.7};
        accept = [](const Graph&, const Profile& p) {
            return p.classical == 1 && p.per_ell[0].see == 1 && p.per_ell[0].capture == 2;
        };
        prefilter = [&](const Graph& g) {
            auto so = solve_options(o);
            return solve(g, GameSpec::make(g, Variant::Capture, 1, 1), so).winner() == Winner::Robber &&
                   solve(g, GameSpec::make(g, Variant::See, 1, 1), so).winner() == Winner::Cops;
        };
    } else if (o.target == "delayed") {
        kind = "randconnected";
        po.delayed = true;
        accept = [](const Graph&, const Profile& p) { return p.delayed && *p.delayed > p.domination; };
    } else {
        throw GraphError("unknown witness target '" + o.target + "'");
    }
    std::uint64_t i = 0;
    auto next = [&]() -> std::optional<Graph> {
        auto r = parse_recipe(kind + ":n=" + std::to_string(o.max_n) + ",seed=" + std::to_string(o.seed + i));
        r.density = densities[i % densities.size()];
        ++i;
        return generate(r).graph;
    };
    const std::size_t budget = o.budget == 20'000'000 ? 100'000 : o.budget;
    auto found = search_witness(next, accept, po, budget, prefilter);
    Json j{{"target", o.target}, {"candidates", found.candidates}};
    std::ostringstream t;
    t << found.candidates << " candidates\n";
    if (!found.witness) {
        j["witness"] = nullptr;
        t << "no witness\n";
        emit(o, j, t.str());
        return kInconclusive;
    }
    j["witness"] = to_json(*found.witness);
    j["profile"] = to_json(*found.profile);
    t << write_graph(*found.witness);
    emit(o, j, t.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cops and robber with limited visibility"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool graph = true) {
        if (graph) {
            c->add_option("--graph", o.graph_path, "graph file (text or JSON)");
            c->add_option("--recipe", o.recipe, "family recipe, e.g. cycle:6 or tfamily:k=2,ell=1");
        }
        c->add_option("--ell", o.ell, "visibility radius")->check(CLI::NonNegativeNumber);
        c->add_option("--out", o.out, "write the report here instead of stdout");
        c->add_option("--seed", o.seed, "seed for random choices");
        c->add_option("--budget", o.budget, "state budget per solve (witness: candidate budget)")
            ->check(CLI::PositiveNumber);
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json", "structured"}));
        c->add_option("--workers", o.workers, "solver threads (0: runtime default)")->check(CLI::NonNegativeNumber);
        c->add_flag("--timing", o.timing, "include wall time in structured output");
    };
    auto game_flags = [&](CLI::App* c) {
        c->add_option("--cops", o.cops, "number of cops")->check(CLI::NonNegativeNumber);
        c->add_option("--variant", o.variant, "see, capture, monotone, delayed, classical or zerovis");
    };

    auto* gen = app.add_subcommand("generate", "emit a family member");
    common(gen);
    auto* analyze = app.add_subcommand("analyze", "structural metrics");
    common(analyze);
    auto* solve_cmd = app.add_subcommand("solve", "solve a game, or find the cop number without --cops");
    common(solve_cmd);
    game_flags(solve_cmd);
    solve_cmd->add_option("--policy", o.policy, "write the winning policy table as JSON");
    auto* prof = app.add_subcommand("profile", "every cop number up to --ell");
    common(prof);
    prof->add_flag("--monotone", o.monotone, "include monotone capture numbers");
    prof->add_flag("--delayed", o.delayed, "include the time-delayed number");
    auto* rank = app.add_subcommand("rank", "tree rank with certificate");
    common(rank);
    auto* verify = app.add_subcommand("verify", "check a cleaning script");
    common(verify);
    verify->add_option("--script", o.script, "file, or tell_2cop, tell_3cop, tree1, tfamily, solver")->required();
    verify->add_option("--cops", o.cops, "cops for the solver script");
    verify->add_option("--dot", o.dot, "write per-round DOT here");
    auto* sim = app.add_subcommand("simulate", "play one match");
    common(sim);
    game_flags(sim);
    sim->add_option("--strategy", o.strategy, "solver or shadow")->check(CLI::IsMember({"solver", "shadow"}));
    sim->add_option("--robber", o.robber, "solver or random")->check(CLI::IsMember({"solver", "random"}));
    sim->add_option("--rounds", o.rounds, "round limit")->check(CLI::PositiveNumber);
    auto* wit = app.add_subcommand("witness", "search random graphs for a separating example");
    common(wit, false);
    wit->add_option("--target", o.target, "gap (c = c'_1 = 1, c_1 = 2) or delayed (c_t > gamma)")
        ->check(CLI::IsMember({"gap", "delayed"}));
    wit->add_option("--max-n", o.max_n, "candidate order")->check(CLI::Range(4, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) return cmd_generate(o);
        if (*analyze) return cmd_analyze(o);
        if (*solve_cmd) return cmd_solve(o);
        if (*prof) return cmd_profile(o);
        if (*rank) return cmd_rank(o);
        if (*verify) return cmd_verify(o);
        if (*sim) return cmd_simulate(o);
        if (*wit) return cmd_witness(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
