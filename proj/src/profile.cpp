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

#include <algorithm>
#include <stdexcept>

#include "copvis/solver.hpp"

namespace copvis {

std::optional<int> cop_number(const Graph& g, Variant variant, int ell, const SolveOptions& options, int max_cops)
{
    if (!g.connected()) throw GraphError("cop_number: graph is disconnected");
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        // A cop on every vertex wins at once.
        if (k == n) return n;
        if (k > max_cops) throw GraphError("cop_number: more than " + std::to_string(max_cops) + " cops needed");
        auto res = solve(g, GameSpec::make(g, variant, ell, k), options);
        if (res.winner() == Winner::Inconclusive) return std::nullopt;
        if (res.winner() == Winner::Cops) return k;
    }
    return n;
}

namespace {

int require(std::optional<int> v, const char* what)
{
    if (!v) throw std::runtime_error(std::string("inconclusive solve for ") + what);
    return *v;
}

}  // namespace

Profile profile(const Graph& g, const ProfileOptions& options)
{
    Profile p;
    auto m = metrics(g);
    p.radius = m.radius;
    p.diameter = m.diameter;
    p.classical = require(cop_number(g, Variant::Classical, 0, options.solve), "c");
    p.zero = require(cop_number(g, Variant::ZeroVis, 0, options.solve), "c_0");
    p.domination = k_domination_number(g, 1);
    if (options.delayed) p.delayed = require(cop_number(g, Variant::TimeDelayed, 0, options.solve), "c_t");
    for (int ell : options.ells) {
        EllNumbers e;
        e.ell = ell;
        e.capture = require(cop_number(g, Variant::Capture, ell, options.solve), "c_ell");
        e.see = require(cop_number(g, Variant::See, ell, options.solve), "c'_ell");
        if (options.monotone) e.monotone = require(cop_number(g, Variant::MonotoneCapture, ell, options.solve), "mc_ell");
        e.domination = k_domination_number(g, ell);
        p.per_ell.push_back(e);
    }
    std::sort(p.per_ell.begin(), p.per_ell.end(), [](const auto& a, const auto& b) { return a.ell < b.ell; });
    return p;
}

std::vector<std::string> inequality_violations(const Profile& p)
{
    std::vector<std::string> out;
    auto fail = [&](const std::string& what, int ell) {
        out.push_back(what + (ell >= 0 ? " (ell=" + std::to_string(ell) + ")" : ""));
    };
    if (p.classical > p.domination) fail("c > gamma", -1);
    if (p.classical > p.zero) fail("c > c_0", -1);
    if (p.delayed && *p.delayed < p.classical) fail("c_t < c", -1);
    int prev_capture = p.zero;
    int prev_see = p.zero;  // seeing and capturing coincide at ell = 0
    for (const auto& e : p.per_ell) {
        if (e.ell == 0 && e.capture != p.zero) fail("c_ell != c_0", e.ell);
        if (e.see > e.capture) fail("c'_ell > c_ell", e.ell);
        if (e.see > e.domination) fail("c'_ell > gamma_ell", e.ell);
        if (e.capture > prev_capture) fail("c_ell increases with ell", e.ell);
        if (e.see > prev_see) fail("c'_ell increases with ell", e.ell);
        if (e.capture < p.classical) fail("c_ell < c", e.ell);
        if (e.ell >= p.diameter && e.capture != p.classical) fail("c_ell != c at ell >= diam", e.ell);
        if (e.ell >= p.radius && e.see != 1) fail("c'_ell != 1 at ell >= rad", e.ell);
        if (e.monotone && *e.monotone < e.capture) fail("mc_ell < c_ell", e.ell);
        prev_capture = e.capture;
        prev_see = e.see;
    }
    return out;
}

WitnessSearch search_witness(const std::function<std::optional<Graph>()>& next,
                             const std::function<bool(const Graph&, const Profile&)>& accept,
                             const ProfileOptions& options, std::size_t budget,
                             const std::function<bool(const Graph&)>& prefilter)
{
    WitnessSearch out;
    while (out.candidates < budget) {
        auto g = next();
        if (!g) break;
        ++out.candidates;
        if (prefilter && !prefilter(*g)) continue;
        Profile p = profile(*g, options);
        if (accept(*g, p)) {
            out.witness = std::move(g);
            out.profile = p;
            break;
        }
    }
    return out;
}

}  // namespace copvis
