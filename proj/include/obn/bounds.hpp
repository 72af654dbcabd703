#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "obn/burning.hpp"
#include "obn/invariants.hpp"
#include "obn/orientation.hpp"

namespace obn {

enum class UpperReason { matching, clique_cover, domination, fpt_large_b };

inline const char* to_string(UpperReason r) {
    switch (r) {
    case UpperReason::matching:
        return "matching";
    case UpperReason::clique_cover:
        return "clique_cover";
    case UpperReason::domination:
        return "domination";
    case UpperReason::fpt_large_b:
        return "fpt_large_b";
    }
    return "?";
}

struct ObnBracket {
    int lower = 0;
    int upper = 0;
    Orientation lower_witness; // every maximum-independent-set vertex has in-degree 0
    UpperReason upper_reason = UpperReason::matching;
    std::string lower_note;
    std::string upper_note;
};

struct LowerBoundResult {
    int value = 0;
    Orientation witness;
};

/// alpha(G) is a lower bound: orient every edge out of a maximum independent
/// set I (the rest low -> high), so all of I has in-degree 0 and any burning
/// sequence must spend one fire per member of I.
inline LowerBoundResult lower_bound_alpha(const Graph& g) {
    SetResult alpha = max_independent_set(g);
    std::vector<char> in_set(static_cast<std::size_t>(g.n()), 0);
    for (int v : alpha.members)
        in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<bool> bits(static_cast<std::size_t>(g.m()), false);
    const auto& edges = g.edges();
    for (int e = 0; e < g.m(); ++e) {
        const auto& [u, v] = edges[static_cast<std::size_t>(e)];
        // bit true flips (u,v) to v -> u; I is independent, so u,v are never both in I
        bits[static_cast<std::size_t>(e)] = in_set[static_cast<std::size_t>(v)] != 0;
    }
    return {alpha.size, Orientation(g, std::move(bits))};
}

/// n - mn(G) + 1
inline int upper_bound_matching(const Graph& g) { return g.n() - max_matching(g).size + 1; }

/// cc(G) + 2
inline int upper_bound_clique_cover(const Graph& g) { return clique_cover_number(g).size + 2; }

/// For perfect graphs cc = alpha, so the bracket collapses to [alpha, alpha+2].
/// Perfection is the caller's assertion; it is not tested here.
inline std::pair<int, int> perfect_bracket(const Graph& g) {
    int alpha = max_independent_set(g).size;
    return {alpha, alpha + 2};
}

/// ceil(n / (dbar + 1)) with dbar = 2m/n: the average-degree lower bound on
/// alpha, hence on the orientable burning number. 0 for the empty graph.
inline int caro_wei_lower(const Graph& g) {
    if (g.n() == 0)
        return 0;
    const long long n = g.n(), m = g.m();
    return static_cast<int>((n * n + 2 * m + n - 1) / (2 * m + n));
}

/// Exhaustive orientable domination number, tiny instances only:
/// every orientation x every vertex subset.
inline int odn_bruteforce(const Graph& g) {
    if (g.m() > 12 || g.n() > 8)
        throw BudgetError("odn_bruteforce: instance too large (m <= 12, n <= 8)");
    const int n = g.n();
    if (n == 0)
        return 0;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    int odn = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            closed[static_cast<std::size_t>(v)] = std::uint32_t{1} << v;
        const auto& edges = g.edges();
        for (int e = 0; e < g.m(); ++e) {
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            if ((mask >> e) & 1)
                closed[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
            else
                closed[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        }
        int gamma = n;
        for (std::uint32_t set = 0; set <= all; ++set) {
            if (std::popcount(set) >= gamma)
                continue;
            std::uint32_t covered = 0;
            for (std::uint32_t s = set; s;) {
                int v = std::countr_zero(s);
                s &= s - 1;
                covered |= closed[static_cast<std::size_t>(v)];
            }
            if (covered == all)
                gamma = std::popcount(set);
        }
        odn = std::max(odn, gamma);
    }
    return odn;
}

/// [max(alpha, caro_wei), min(n - mn + 1, cc + 2)] with the alpha witness
/// orientation. The clique-cover side needs the exact coloring budget; past
/// it the matching bound alone is used (still sound).
inline ObnBracket bracket(const Graph& g) {
    ObnBracket b;
    LowerBoundResult lower = lower_bound_alpha(g);
    int cw = caro_wei_lower(g);
    b.lower = std::max(lower.value, cw);
    b.lower_witness = std::move(lower.witness);
    b.lower_note = lower.value >= cw ? "independence number" : "average-degree bound";

    int from_matching = upper_bound_matching(g);
    b.upper = from_matching;
    b.upper_reason = UpperReason::matching;
    b.upper_note = "n - matching + 1";
    if (g.n() <= kMaxColoringVertices) {
        int from_cover = upper_bound_clique_cover(g);
        if (from_cover < from_matching) {
            b.upper = from_cover;
            b.upper_reason = UpperReason::clique_cover;
            b.upper_note = "clique cover + 2";
        }
    } else {
        b.upper_note += " (clique-cover bound skipped: coloring budget)";
    }
    return b;
}

} // namespace obn
