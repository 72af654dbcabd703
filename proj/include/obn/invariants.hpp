#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "obn/graph.hpp"

namespace obn {

// Exactness budgets. These routines never return a heuristic answer: an
// instance beyond its budget raises BudgetError instead.
inline constexpr int kMaxBitsetVertices = 64;   // clique / independent set / cvd
inline constexpr int kMaxColoringVertices = 20; // chromatic number, clique cover
inline constexpr int kMaxPathVertices = 20;     // longest path subset DP

struct SetResult {
    int size = 0;
    std::vector<int> members;
};

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;
};

struct PartitionResult {
    int size = 0;
    std::vector<std::vector<int>> parts;
};

struct ColoringResult {
    int count = 0;
    std::vector<int> colors;
};

struct PathResult {
    int length = 0; // in edges
    std::vector<int> vertices;
};

// ---------------------------------------------------------------------------
// Certificate checkers. Deliberately naive so they can be audited at a glance.
// ---------------------------------------------------------------------------

inline bool is_independent_set(const Graph& g, std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n())
            return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.has_edge(s[i], s[j]))
                return false;
    }
    return true;
}

inline bool is_clique(const Graph& g, std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n())
            return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    }
    return true;
}

inline bool is_matching(const Graph& g, std::span<const Edge> m) {
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [u, v] : m) {
        if (!g.has_edge(u, v))
            return false;
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
            return false;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline bool is_clique_cover(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (const auto& part : parts) {
        if (!is_clique(g, part))
            return false;
        for (int v : part) {
            if (seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

inline bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
    if (static_cast<int>(colors.size()) != g.n())
        return false;
    for (int c : colors)
        if (c < 0)
            return false;
    for (const auto& [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
            return false;
    return true;
}

inline bool is_vertex_cover(const Graph& g, std::span<const int> s) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n())
            return false;
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)])
            return false;
    return true;
}

inline bool is_cluster_deletion_set(const Graph& g, std::span<const int> s) {
    std::vector<int> rest;
    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n())
            return false;
        removed[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!removed[static_cast<std::size_t>(v)])
            rest.push_back(v);
    Graph h = induced_subgraph(g, rest);
    for (const auto& comp : connected_components(h))
        if (!is_clique(h, comp))
            return false;
    return true;
}

inline bool is_simple_path(const Graph& g, std::span<const int> vertices) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(vertices[i - 1], v))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy-coloring upper bound.
// Vertices are explored by descending degree (ties by index) so witnesses
// are reproducible.
// ---------------------------------------------------------------------------

namespace detail {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : n_(g.n()) {
        perm_.resize(static_cast<std::size_t>(n_));
        std::iota(perm_.begin(), perm_.end(), 0);
        std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (g.has_edge(perm_[static_cast<std::size_t>(i)],
                               perm_[static_cast<std::size_t>(j)]))
                    adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }

    SetResult run() {
        if (n_ > 0)
            expand(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1, 0, 0);
        SetResult result;
        result.size = best_;
        for (std::uint64_t bits = best_set_; bits; bits &= bits - 1)
            result.members.push_back(perm_[static_cast<std::size_t>(std::countr_zero(bits))]);
        std::sort(result.members.begin(), result.members.end());
        return result;
    }

private:
    void expand(std::uint64_t cand, std::uint64_t current, int size) {
        if (size > best_) {
            best_ = size;
            best_set_ = current;
        }
        if (!cand)
            return;
        // greedy coloring of the candidates: color index bounds the clique
        // extension, so candidates are processed from the highest color down
        colored_.clear();
        std::uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                colored_.emplace_back(color, v);
                uncolored &= ~(std::uint64_t{1} << v);
                avail &= ~(std::uint64_t{1} << v);
                avail &= ~adj_[static_cast<std::size_t>(v)];
            }
        }
        std::uint64_t remaining = cand;
        for (auto it = colored_.rbegin(); it != colored_.rend(); ++it) {
            auto [c, v] = *it;
            if (size + c <= best_)
                return;
            const std::uint64_t bit = std::uint64_t{1} << v;
            expand(remaining & adj_[static_cast<std::size_t>(v)], current | bit, size + 1);
            remaining &= ~bit;
        }
    }

    int n_;
    std::vector<int> perm_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> colored_;
    std::uint64_t best_set_ = 0;
    int best_ = 0;
};

inline void require_budget(const Graph& g, int limit, const char* what) {
    if (g.n() > limit)
        throw BudgetError(std::string(what) + ": instance too large (n = " +
                          std::to_string(g.n()) + ", budget " + std::to_string(limit) + ")");
}

} // namespace detail

inline SetResult clique_number(const Graph& g) {
    detail::require_budget(g, kMaxBitsetVertices, "clique_number");
    return detail::MaxCliqueSearch(g).run();
}

inline SetResult max_independent_set(const Graph& g) {
    detail::require_budget(g, kMaxBitsetVertices, "max_independent_set");
    return detail::MaxCliqueSearch(complement(g)).run();
}

inline SetResult vertex_cover_number(const Graph& g) {
    detail::require_budget(g, kMaxBitsetVertices, "vertex_cover_number");
    SetResult alpha = max_independent_set(g);
    SetResult cover;
    cover.size = g.n() - alpha.size;
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : alpha.members)
        in[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!in[static_cast<std::size_t>(v)])
            cover.members.push_back(v);
    return cover;
}

// ---------------------------------------------------------------------------
// Maximum matching (general graphs, exact) via Edmonds' blossom algorithm.
// ---------------------------------------------------------------------------

inline MatchingResult max_matching(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
        static_cast<std::size_t>(g.n()));
    boost::edmonds_maximum_cardinality_matching(bg, mate.data());

    MatchingResult result;
    const auto null_vertex = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < g.n(); ++v) {
        auto w = mate[static_cast<std::size_t>(v)];
        if (w != null_vertex && v < static_cast<int>(w))
            result.edges.emplace_back(v, static_cast<int>(w));
    }
    std::sort(result.edges.begin(), result.edges.end());
    result.size = static_cast<int>(result.edges.size());
    return result;
}

// ---------------------------------------------------------------------------
// Chromatic number: clique lower bound, greedy upper bound, then exact
// k-colorability backtracking in between.
// ---------------------------------------------------------------------------

namespace detail {

class ColoringSearch {
public:
    explicit ColoringSearch(const Graph& g) : g_(&g), n_(g.n()) {
        perm_.resize(static_cast<std::size_t>(n_));
        std::iota(perm_.begin(), perm_.end(), 0);
        std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
    }

    ColoringResult greedy() const {
        std::vector<int> colors(static_cast<std::size_t>(n_), -1);
        int used = 0;
        for (int v : perm_) {
            std::uint64_t taken = 0;
            for (int w : g_->neighbors(v))
                if (colors[static_cast<std::size_t>(w)] >= 0)
                    taken |= std::uint64_t{1} << colors[static_cast<std::size_t>(w)];
            int c = std::countr_one(taken);
            colors[static_cast<std::size_t>(v)] = c;
            used = std::max(used, c + 1);
        }
        return {used, std::move(colors)};
    }

    std::optional<std::vector<int>> colorable(int k) {
        colors_.assign(static_cast<std::size_t>(n_), -1);
        if (try_color(0, 0, k))
            return colors_;
        return std::nullopt;
    }

private:
    bool try_color(std::size_t idx, int used, int k) {
        if (idx == perm_.size())
            return true;
        int v = perm_[idx];
        std::uint64_t taken = 0;
        for (int w : g_->neighbors(v))
            if (colors_[static_cast<std::size_t>(w)] >= 0)
                taken |= std::uint64_t{1} << colors_[static_cast<std::size_t>(w)];
        // a fresh color is tried at most once (color classes are symmetric)
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1)
                continue;
            colors_[static_cast<std::size_t>(v)] = c;
            if (try_color(idx + 1, std::max(used, c + 1), k))
                return true;
        }
        colors_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph* g_;
    int n_;
    std::vector<int> perm_;
    std::vector<int> colors_;
};

} // namespace detail

inline ColoringResult chromatic_number(const Graph& g) {
    detail::require_budget(g, kMaxColoringVertices, "chromatic_number");
    if (g.n() == 0)
        return {0, {}};
    detail::ColoringSearch search(g);
    ColoringResult greedy = search.greedy();
    int lower = clique_number(g).size;
    for (int k = lower; k < greedy.count; ++k)
        if (auto colors = search.colorable(k))
            return {k, std::move(*colors)};
    return greedy;
}

/// Minimum partition of V into cliques, computed as a proper coloring of
/// the complement; parts are listed by their smallest member.
inline PartitionResult clique_cover_number(const Graph& g) {
    detail::require_budget(g, kMaxColoringVertices, "clique_cover_number");
    ColoringResult coloring = chromatic_number(complement(g));
    PartitionResult result;
    result.size = coloring.count;
    result.parts.assign(static_cast<std::size_t>(coloring.count), {});
    std::vector<int> order(static_cast<std::size_t>(coloring.count), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        int c = coloring.colors[static_cast<std::size_t>(v)];
        if (order[static_cast<std::size_t>(c)] < 0)
            order[static_cast<std::size_t>(c)] = next++;
        result.parts[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])].push_back(v);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cluster vertex deletion: iterative deepening on induced-P3 branching.
// The branch point is always the lexicographically first induced P3
// (a,b,c) with center b, endpoints a < c.
// ---------------------------------------------------------------------------

namespace detail {

struct P3 {
    int a = -1, b = -1, c = -1;
    bool found() const { return a >= 0; }
};

inline P3 first_induced_p3(const Graph& g, std::uint64_t alive) {
    for (int a = 0; a < g.n(); ++a) {
        if (!((alive >> a) & 1))
            continue;
        for (int b = 0; b < g.n(); ++b) {
            if (b == a || !((alive >> b) & 1) || !g.has_edge(a, b))
                continue;
            for (int c = a + 1; c < g.n(); ++c) {
                if (c == b || !((alive >> c) & 1))
                    continue;
                if (g.has_edge(b, c) && !g.has_edge(a, c))
                    return {a, b, c};
            }
        }
    }
    return {};
}

inline bool cvd_search(const Graph& g, std::uint64_t alive, int budget,
                       std::vector<int>& deleted) {
    P3 p3 = first_induced_p3(g, alive);
    if (!p3.found())
        return true;
    if (budget == 0)
        return false;
    for (int x : {p3.a, p3.b, p3.c}) {
        deleted.push_back(x);
        if (cvd_search(g, alive & ~(std::uint64_t{1} << x), budget - 1, deleted))
            return true;
        deleted.pop_back();
    }
    return false;
}

} // namespace detail

inline SetResult cluster_vertex_deletion(const Graph& g) {
    detail::require_budget(g, kMaxBitsetVertices, "cluster_vertex_deletion");
    const std::uint64_t all =
        g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    for (int k = 0;; ++k) {
        std::vector<int> deleted;
        if (detail::cvd_search(g, all, k, deleted)) {
            std::sort(deleted.begin(), deleted.end());
            return {k, std::move(deleted)};
        }
    }
}

// ---------------------------------------------------------------------------
// Longest path (in edges) by dynamic programming over vertex subsets.
// ---------------------------------------------------------------------------

inline PathResult longest_path_length(const Graph& g) {
    detail::require_budget(g, kMaxPathVertices, "longest_path_length");
    if (g.n() == 0)
        return {0, {}};
    const int n = g.n();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    // endpoints[mask] = vertices at which a simple path covering `mask` can end
    std::vector<std::uint32_t> endpoints(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        endpoints[std::size_t{1} << v] = std::uint32_t{1} << v;

    std::uint32_t best_mask = 1;
    int best_size = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t ends = endpoints[mask];
        if (!ends)
            continue;
        if (std::popcount(mask) > best_size) {
            best_size = std::popcount(mask);
            best_mask = mask;
        }
        for (std::uint32_t e = ends; e;) {
            int v = std::countr_zero(e);
            e &= e - 1;
            for (std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask; ext;) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                endpoints[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }

    PathResult result;
    result.length = best_size - 1;
    std::uint32_t mask = best_mask;
    int v = std::countr_zero(endpoints[mask]);
    result.vertices.push_back(v);
    while (std::popcount(mask) > 1) {
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        std::uint32_t prev = adj[static_cast<std::size_t>(v)] & endpoints[rest];
        v = std::countr_zero(prev);
        result.vertices.push_back(v);
        mask = rest;
    }
    std::reverse(result.vertices.begin(), result.vertices.end());
    return result;
}

// ---------------------------------------------------------------------------
// Derived predicates
// ---------------------------------------------------------------------------

/// alpha(G) == n - mn(G)?
inline bool is_konig_egervary(const Graph& g) {
    return max_independent_set(g).size == g.n() - max_matching(g).size;
}

/// Is G a disjoint union of P2 components?
inline bool is_disjoint_p2s(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() != 2)
            return false;
    return true;
}

struct InvariantReport {
    SetResult alpha;
    MatchingResult matching;
    PartitionResult clique_cover;
    SetResult omega;
    ColoringResult chi;
    SetResult vc;
    SetResult cvd;
    PathResult longest_path;
};

inline InvariantReport compute_invariants(const Graph& g) {
    InvariantReport report;
    report.alpha = max_independent_set(g);
    report.matching = max_matching(g);
    report.clique_cover = clique_cover_number(g);
    report.omega = clique_number(g);
    report.chi = chromatic_number(g);
    report.vc = vertex_cover_number(g);
    report.cvd = cluster_vertex_deletion(g);
    report.longest_path = longest_path_length(g);
    return report;
}

} // namespace obn
