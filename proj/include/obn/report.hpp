#pragma once

// JSON views of the solver results, shared by the CLI and its tests.
// Kept out of the algorithm headers so they stay dependency-free.

#include <string>

#include "json.hpp"

#include "obn/bounds.hpp"
#include "obn/fpt.hpp"
#include "obn/invariants.hpp"
#include "obn/reductions.hpp"
#include "obn/solver.hpp"

namespace obn {

inline constexpr const char* kReportSchema = "obn-report/1";

inline nlohmann::json obn_report(const Graph& g, const ObnResult& r) {
    return {
        {"n", g.n()},
        {"m", g.m()},
        {"method", to_string(r.method)},
        {"obn", r.value},
        {"alpha", max_independent_set(g).size},
        {"bracket", {bracket(g).lower, bracket(g).upper}},
        {"witness_mask", r.witness.mask()},
        {"explored", r.explored},
    };
}

inline nlohmann::json bounds_report(const Graph& g) {
    ObnBracket br = bracket(g);
    nlohmann::json j{
        {"n", g.n()},
        {"m", g.m()},
        {"alpha", lower_bound_alpha(g).value},
        {"caro_wei", caro_wei_lower(g)},
        {"upper_matching", upper_bound_matching(g)},
        {"bracket", {br.lower, br.upper}},
        {"lower_witness_mask", br.lower_witness.mask()},
        {"upper_reason", to_string(br.upper_reason)},
        {"lower_note", br.lower_note},
        {"upper_note", br.upper_note},
    };
    if (g.n() <= kMaxColoringVertices)
        j["upper_clique_cover"] = upper_bound_clique_cover(g);
    auto [plo, phi] = perfect_bracket(g);
    j["perfect_bracket"] = {plo, phi};
    j["perfect_caveat"] = "valid only if the input is perfect; perfection is not tested";
    if (g.n() <= 8 && g.m() <= 12) {
        int odn = odn_bruteforce(g);
        j["odn"] = odn;
        j["upper_domination"] = odn + 1;
    }
    return j;
}

inline nlohmann::json invariants_report(const Graph& g) {
    InvariantReport inv = compute_invariants(g);
    return {
        {"n", g.n()},
        {"m", g.m()},
        {"alpha", {{"value", inv.alpha.size}, {"witness", inv.alpha.members}}},
        {"matching", {{"value", inv.matching.size}, {"witness", inv.matching.edges}}},
        {"clique_cover", {{"value", inv.clique_cover.size}, {"witness", inv.clique_cover.parts}}},
        {"omega", {{"value", inv.omega.size}, {"witness", inv.omega.members}}},
        {"chi", {{"value", inv.chi.count}, {"witness", inv.chi.colors}}},
        {"vertex_cover", {{"value", inv.vc.size}, {"witness", inv.vc.members}}},
        {"cvd", {{"value", inv.cvd.size}, {"witness", inv.cvd.members}}},
        {"longest_path", {{"value", inv.longest_path.length}, {"witness", inv.longest_path.vertices}}},
        {"konig_egervary", is_konig_egervary(g)},
        {"disjoint_p2s", is_disjoint_p2s(g)},
    };
}

/// Index-range sidecar for a reduction instance; pairs with the edge-list
/// serialization of the target graph.
inline nlohmann::json reduction_sidecar(const ReductionInstance& ri) {
    nlohmann::json j{
        {"kind", to_string(ri.kind)},
        {"k", ri.k},
        {"target_b", ri.target_b},
        {"source_vertices", {0, ri.source.n() - 1}},
        {"isolated_vertices", {ri.isolated_first, ri.isolated_first + ri.isolated_count - 1}},
    };
    if (ri.universal_vertex >= 0)
        j["universal_vertex"] = ri.universal_vertex;
    if (!ri.parts.empty())
        j["parts"] = ri.parts;
    return j;
}

} // namespace obn
