#pragma once

#include <string>
#include <vector>

#include "obn/graph.hpp"
#include "obn/invariants.hpp"
#include "obn/solver.hpp"

namespace obn {

enum class ReductionKind { independent_set, multicolored_independent_set };

inline const char* to_string(ReductionKind k) {
    return k == ReductionKind::independent_set ? "independent_set"
                                               : "multicolored_independent_set";
}

/// A hardness-gadget instance: the source decision problem, the target
/// graph H with its target burning number, and the index bookkeeping that
/// maps added vertices back to the construction. Source vertices keep
/// their indices 0..n-1 in H.
struct ReductionInstance {
    ReductionKind kind = ReductionKind::independent_set;
    Graph source;
    int k = 0;                             // solution size / number of parts
    std::vector<std::vector<int>> parts;   // MCIS only: the clique partition
    Graph target;                          // H
    int target_b = 0;                      // ask: obn(H) >= target_b?
    int isolated_first = 0;                // first index of the isolated set I
    int isolated_count = 0;                // |I|
    int universal_vertex = -1;             // MCIS only
};

/// Independent Set -> OBN: H = G plus n isolated vertices, target k + n.
inline ReductionInstance reduce_is(const Graph& g, int k) {
    if (k < 1 || k > g.n())
        throw std::invalid_argument("reduce_is: k out of range");
    ReductionInstance ri;
    ri.kind = ReductionKind::independent_set;
    ri.source = g;
    ri.k = k;
    ri.target = disjoint_union(g, empty_graph(g.n()));
    ri.target_b = k + g.n();
    ri.isolated_first = g.n();
    ri.isolated_count = g.n();
    return ri;
}

/// Multicolored Independent Set -> OBN: H = G plus four isolated vertices
/// plus a universal vertex, target k + 4. H is connected by construction.
inline ReductionInstance reduce_mcis(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (const auto& part : parts) {
        if (part.empty() || !is_clique(g, part))
            throw std::invalid_argument("reduce_mcis: parts must be nonempty cliques");
        for (int v : part) {
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("reduce_mcis: parts must be disjoint");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("reduce_mcis: parts must cover every vertex");

    ReductionInstance ri;
    ri.kind = ReductionKind::multicolored_independent_set;
    ri.source = g;
    ri.k = static_cast<int>(parts.size());
    ri.parts = parts;
    std::vector<Edge> edges = g.edges();
    const int u = g.n() + 4;
    for (int v = 0; v < u; ++v)
        edges.emplace_back(v, u);
    ri.target = Graph(g.n() + 5, std::move(edges));
    ri.target_b = ri.k + 4;
    ri.isolated_first = g.n();
    ri.isolated_count = 4;
    ri.universal_vertex = u;
    return ri;
}

/// Empirical shadow of the reduction correctness proofs: the source
/// decision and the target decision, both answered by exact oracles, must
/// agree. (For a clique partition into k parts, an independent set of size
/// k is automatically multicolored, so both source forms reduce to
/// alpha >= k.)
inline bool check_equivalence(const ReductionInstance& ri, const ExactOptions& opts = {}) {
    bool source_yes = max_independent_set(ri.source).size >= ri.k;
    bool target_yes = obn_decision(ri.target, ri.target_b, false, opts).satisfied;
    return source_yes == target_yes;
}

} // namespace obn
