#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "obn/burning.hpp"
#include "obn/invariants.hpp"
#include "obn/orientation.hpp"

namespace obn {

/// The cluster decomposition behind the structural shortcuts: a minimum
/// deletion set S, the clique components of G - S, and the quantities the
/// shortcut window is phrased in.
struct ClusterStructure {
    std::vector<int> deletion_set;            // S, sorted
    int s = 0;                                // |S| = cvd(G)
    std::vector<std::vector<int>> components; // cliques of G - S, by smallest vertex
    int p = 0;                                // number of components
    int omega = 0;                            // clique number of G
    int ell = 0;                              // longest path length, in edges

    /// Number of large fires in a schedule of length b-1.
    int large_fire_count(int b) const { return std::max(0, b - 1 - ell); }
};

inline ClusterStructure cluster_structure(const Graph& g) {
    ClusterStructure cs;
    SetResult cvd = cluster_vertex_deletion(g);
    cs.deletion_set = cvd.members;
    cs.s = cvd.size;
    std::vector<char> in_s(static_cast<std::size_t>(g.n()), 0);
    for (int v : cs.deletion_set)
        in_s[static_cast<std::size_t>(v)] = 1;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!in_s[static_cast<std::size_t>(v)])
            rest.push_back(v);
    Graph h = induced_subgraph(g, rest);
    for (const auto& comp : connected_components(h)) {
        std::vector<int> original;
        for (int v : comp)
            original.push_back(rest[static_cast<std::size_t>(v)]);
        cs.components.push_back(std::move(original));
    }
    cs.p = static_cast<int>(cs.components.size());
    cs.omega = clique_number(g).size;
    cs.ell = longest_path_length(g).length;
    return cs;
}

namespace detail {

inline void require_cluster_structure(const Graph& g, const ClusterStructure& cs) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    auto mark = [&](int v) {
        if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("cluster structure does not partition the graph");
        seen[static_cast<std::size_t>(v)] = 1;
    };
    for (int v : cs.deletion_set)
        mark(v);
    for (const auto& comp : cs.components) {
        for (int v : comp)
            mark(v);
        if (!is_clique(g, comp))
            throw std::invalid_argument("cluster structure: component is not a clique");
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("cluster structure does not cover the graph");
}

} // namespace detail

enum class Shortcut { yes, no, unknown };

inline const char* to_string(Shortcut s) {
    switch (s) {
    case Shortcut::yes:
        return "yes";
    case Shortcut::no:
        return "no";
    case Shortcut::unknown:
        return "unknown";
    }
    return "?";
}

/// Sound one-look answers to "is obn(G) >= b?":
/// b <= p is always yes (one independent vertex per component),
/// b > p + s + 2 is always no (kings burn every component within radius 2).
/// The window in between is where the real search lives.
inline Shortcut shortcut_decision(const ClusterStructure& cs, int b) {
    if (b <= cs.p)
        return Shortcut::yes;
    if (b > cs.p + cs.s + 2)
        return Shortcut::no;
    return Shortcut::unknown;
}

inline Shortcut shortcut_decision(const Graph& g, int b) {
    return shortcut_decision(cluster_structure(g), b);
}

/// The three goodness conditions for large fires (radius >= ell).
struct GoodnessReport {
    bool distinct_positions = true;  // no two large fires share a vertex
    bool one_per_component = true;   // at most one large fire per component
    bool kings_in_components = true; // in-component large fires sit at kings

    bool good() const { return distinct_positions && one_per_component && kings_in_components; }
};

inline GoodnessReport goodness_check(const Orientation& o, const BurningSchedule& schedule,
                                     const ClusterStructure& cs) {
    detail::require_cluster_structure(o.graph(), cs);
    GoodnessReport report;
    std::vector<int> large;
    for (int i = cs.ell; i < schedule.length(); ++i)
        large.push_back(schedule.fires[static_cast<std::size_t>(i)]);

    for (std::size_t i = 0; i < large.size(); ++i)
        for (std::size_t j = i + 1; j < large.size(); ++j)
            if (large[i] == large[j])
                report.distinct_positions = false;

    std::vector<int> component_of(static_cast<std::size_t>(o.graph().n()), -1);
    for (std::size_t c = 0; c < cs.components.size(); ++c)
        for (int v : cs.components[c])
            component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<int> count(cs.components.size(), 0);
    for (int v : large) {
        int c = component_of[static_cast<std::size_t>(v)];
        if (c < 0)
            continue;
        if (++count[static_cast<std::size_t>(c)] > 1)
            report.one_per_component = false;
        if (!is_king(o, cs.components[static_cast<std::size_t>(c)], v))
            report.kings_in_components = false;
    }
    return report;
}

/// Rewrites a verifying schedule into a good one of the same length:
/// duplicated large fires are re-seated, co-component large fires are
/// evicted along the arc direction (the head fire is redundant), and the
/// survivors are moved to kings. Requires the large-fire count to fit in
/// the p + s free slots, which the shortcut window guarantees.
inline BurningSchedule normalize_to_good(const Orientation& o, const BurningSchedule& schedule,
                                         const ClusterStructure& cs) {
    const Graph& g = o.graph();
    detail::require_cluster_structure(g, cs);
    if (!verify_schedule(o, schedule))
        throw std::invalid_argument("normalize_to_good: schedule does not verify");
    const int len = schedule.length();
    const int large_count = std::max(0, len - cs.ell);
    if (large_count > cs.p + cs.s)
        throw std::invalid_argument("normalize_to_good: more large fires than p + s slots");

    std::vector<int> component_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t c = 0; c < cs.components.size(); ++c)
        for (int v : cs.components[c])
            component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    BurningSchedule out = schedule;
    auto large_at = [&](int v) {
        std::vector<int> radii;
        for (int i = cs.ell; i < len; ++i)
            if (out.fires[static_cast<std::size_t>(i)] == v)
                radii.push_back(i);
        return radii;
    };
    auto occupied = [&](int v) { return !large_at(v).empty(); };
    auto component_has_large = [&](int c) {
        for (int i = cs.ell; i < len; ++i)
            if (component_of[static_cast<std::size_t>(out.fires[static_cast<std::size_t>(i)])] == c)
                return true;
        return false;
    };

    // phase 1: de-duplicate large-fire positions
    for (;;) {
        int dup_radius = -1;
        for (int i = cs.ell; i < len && dup_radius < 0; ++i)
            for (int j = i + 1; j < len; ++j)
                if (out.fires[static_cast<std::size_t>(i)] ==
                    out.fires[static_cast<std::size_t>(j)]) {
                    dup_radius = j;
                    break;
                }
        if (dup_radius < 0)
            break;
        int target = -1;
        for (int v = 0; v < g.n() && target < 0; ++v)
            if (!occupied(v))
                target = v;
        // large_count <= p + s <= n, so a free vertex always exists
        out.fires[static_cast<std::size_t>(dup_radius)] = target;
    }

    // phase 2: evict co-component large fires; the fire an arc points to is
    // redundant because the tail fire burns everything it reaches
    for (;;) {
        int evict_radius = -1;
        for (int i = cs.ell; i < len && evict_radius < 0; ++i) {
            int vi = out.fires[static_cast<std::size_t>(i)];
            int ci = component_of[static_cast<std::size_t>(vi)];
            if (ci < 0)
                continue;
            for (int j = i + 1; j < len; ++j) {
                int vj = out.fires[static_cast<std::size_t>(j)];
                if (component_of[static_cast<std::size_t>(vj)] != ci)
                    continue;
                evict_radius = o.has_arc(vi, vj) ? j : i;
                break;
            }
        }
        if (evict_radius < 0)
            break;
        int target = -1;
        for (int v = 0; v < g.n() && target < 0; ++v) {
            if (occupied(v))
                continue;
            int c = component_of[static_cast<std::size_t>(v)];
            if (c >= 0 && component_has_large(c))
                continue;
            target = v;
        }
        if (target < 0)
            throw std::logic_error("normalize_to_good: no eviction slot despite L <= p + s");
        out.fires[static_cast<std::size_t>(evict_radius)] = target;
    }

    // phase 3: move each in-component large fire to a king of its component
    for (int i = cs.ell; i < len; ++i) {
        int v = out.fires[static_cast<std::size_t>(i)];
        int c = component_of[static_cast<std::size_t>(v)];
        if (c < 0)
            continue;
        const auto& comp = cs.components[static_cast<std::size_t>(c)];
        if (!is_king(o, comp, v))
            out.fires[static_cast<std::size_t>(i)] = king(o, comp);
    }

    if (!verify_schedule(o, out) || !goodness_check(o, out, cs).good())
        throw std::logic_error("normalize_to_good: normalization failed its contract");
    return out;
}

} // namespace obn
