#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "obn/bounds.hpp"
#include "obn/burning.hpp"
#include "obn/invariants.hpp"
#include "obn/orientation.hpp"

namespace obn {

enum class Method { exact_search, ke_theorem, trivial };

inline const char* to_string(Method m) {
    switch (m) {
    case Method::exact_search:
        return "exact_search";
    case Method::ke_theorem:
        return "ke_theorem";
    case Method::trivial:
        return "trivial";
    }
    return "?";
}

struct ObnResult {
    int value = 0;
    Orientation witness;
    Method method = Method::exact_search;
    std::uint64_t explored = 0; // orientations examined (0 for ke_theorem)
};

struct ExactOptions {
    int budget_edges = 24; // refuse searches beyond 2^budget orientations
    int jobs = 1;          // mask-shard workers inside obn_exact
};

namespace detail {

inline void check_search_budget(const Graph& g, const ExactOptions& opts) {
    if (g.m() <= opts.budget_edges && g.m() <= 62)
        return;
    std::string msg = "obn search budget exceeded: m = " + std::to_string(g.m()) +
                      ", budget " + std::to_string(std::min(opts.budget_edges, 62));
    try {
        ObnBracket br = bracket(g);
        throw BudgetError(msg, br.lower, br.upper);
    } catch (const BudgetError& e) {
        if (e.partial_bracket())
            throw;
        throw BudgetError(msg);
    }
}

struct ShardOutcome {
    int value = -1;
    std::uint64_t mask = 0;
    std::uint64_t explored = 0;
};

} // namespace detail

/// Exact maximum of the burning number over all 2^m orientations.
///
/// The search keeps a running best (seeded by the bracket's lower bound)
/// and asks each orientation only the cheap decision question "does it burn
/// within best steps?"; the full burning number is computed solely for the
/// rare orientations that answer no. The search stops outright once an
/// orientation meets the bracket's upper bound.
inline ObnResult obn_exact(const Graph& g, const ExactOptions& opts = {}) {
    detail::check_search_budget(g, opts);
    ObnBracket br = bracket(g);
    const std::uint64_t total = std::uint64_t{1} << g.m();

    ObnResult result;
    result.method = Method::exact_search;

    int jobs = std::max(1, opts.jobs);
    if (total < 4096)
        jobs = 1;

    if (jobs == 1) {
        BurnSolver solver(g);
        int best = br.lower;
        std::uint64_t best_mask = 0;
        bool improved = false;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            ++result.explored;
            solver.load_mask(mask);
            if (solver.decide(best))
                continue;
            best = solver.solve(nullptr, best + 1);
            best_mask = mask;
            improved = true;
            if (best >= br.upper)
                break;
        }
        result.value = best;
        result.witness = improved ? orientation_from_bits(g, best_mask)
                                  : std::move(br.lower_witness);
        return result;
    }

    std::atomic<int> best{br.lower};
    std::atomic<bool> stop{false};
    std::vector<detail::ShardOutcome> outcomes(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(jobs) - 1) /
                                static_cast<std::uint64_t>(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            detail::ShardOutcome& out = outcomes[static_cast<std::size_t>(w)];
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t hi = std::min(total, lo + chunk);
            BurnSolver solver(g);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if (stop.load(std::memory_order_relaxed))
                    break;
                ++out.explored;
                solver.load_mask(mask);
                int cur = best.load(std::memory_order_relaxed);
                if (solver.decide(cur))
                    continue;
                int bn = solver.solve(nullptr, cur + 1);
                int prev = best.load();
                while (prev < bn && !best.compare_exchange_weak(prev, bn)) {
                }
                if (bn > out.value) {
                    out.value = bn;
                    out.mask = mask;
                }
                if (bn >= br.upper)
                    stop.store(true);
            }
        });
    }
    for (auto& t : workers)
        t.join();

    result.value = best.load();
    bool found = false;
    std::uint64_t best_mask = 0;
    for (const auto& out : outcomes) {
        result.explored += out.explored;
        if (out.value == result.value && (!found || out.mask < best_mask)) {
            found = true;
            best_mask = out.mask;
        }
    }
    result.witness =
        found ? orientation_from_bits(g, best_mask) : std::move(br.lower_witness);
    return result;
}

struct ObnDecision {
    bool satisfied = false;
    /// When satisfied: an orientation whose burning number is at least b.
    std::optional<Orientation> witness;
    /// When not satisfied and requested: per-mask witness schedules showing
    /// every orientation burns within b-1 steps.
    std::optional<std::vector<std::pair<std::uint64_t, BurningSchedule>>> refutation_log;
    std::uint64_t explored = 0;
};

/// Is obn(G) >= b?
inline ObnDecision obn_decision(const Graph& g, int b, bool want_refutation = false,
                                const ExactOptions& opts = {}) {
    ObnDecision result;
    if (b <= 0) {
        result.satisfied = true;
        result.witness = orientation_from_bits(g, 0);
        return result;
    }
    detail::check_search_budget(g, opts);
    ObnBracket br = bracket(g);
    if (b <= br.lower) {
        result.satisfied = true;
        result.witness = std::move(br.lower_witness);
        return result;
    }
    if (b > br.upper && !want_refutation)
        return result;

    BurnSolver solver(g);
    std::vector<std::pair<std::uint64_t, BurningSchedule>> log;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        ++result.explored;
        solver.load_mask(mask);
        BurningSchedule schedule;
        if (!solver.decide(b - 1, want_refutation ? &schedule : nullptr)) {
            result.satisfied = true;
            result.witness = orientation_from_bits(g, mask);
            return result;
        }
        if (want_refutation)
            log.emplace_back(mask, std::move(schedule));
    }
    if (want_refutation)
        result.refutation_log = std::move(log);
    return result;
}

// ---------------------------------------------------------------------------
// König–Egerváry graphs: polynomial fast path
// ---------------------------------------------------------------------------

/// Fire placements of radii 0 and 2 that burn a P4; total over all eight
/// orientations. Returns the lexicographically first valid (v0, v2) pair.
inline std::pair<int, int> p4_fires(const Orientation& o) {
    const Graph& g = o.graph();
    bool shape = g.n() == 4 && g.m() == 3 && connected_components(g).size() == 1;
    if (shape) {
        std::vector<int> degs;
        for (int v = 0; v < 4; ++v)
            degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        shape = degs == std::vector<int>{1, 1, 2, 2};
    }
    if (!shape)
        throw std::invalid_argument("p4_fires: underlying graph is not a P4");
    for (int v0 = 0; v0 < 4; ++v0)
        for (int v2 = 0; v2 < 4; ++v2) {
            auto dist = out_distances_from(o, v2);
            bool covers = true;
            for (int u = 0; u < 4; ++u)
                if (u != v0 && dist[static_cast<std::size_t>(u)] > 2)
                    covers = false;
            if (covers)
                return {v0, v2};
        }
    throw std::logic_error("p4_fires: no valid pair; P4 fire table violated");
}

/// Burning schedule of length alpha(G) for an orientation of a
/// König–Egerváry graph with n > 4 that is not a disjoint union of P2s.
/// Without a perfect matching the unmatched vertices take the small radii
/// and matched-edge tails the rest; with a perfect matching a non-matching
/// edge joins two matching edges into a P4 whose orientation is burned by
/// the radius-0 and radius-2 fires.
inline BurningSchedule ke_schedule(const Orientation& o) {
    const Graph& g = o.graph();
    if (g.n() <= 4)
        throw std::invalid_argument("ke_schedule: needs more than four vertices");
    if (is_disjoint_p2s(g))
        throw std::invalid_argument("ke_schedule: no length-alpha schedule for disjoint P2s");
    if (!is_konig_egervary(g))
        throw std::invalid_argument("ke_schedule: graph is not König–Egerváry");

    MatchingResult matching = max_matching(g);
    const int alpha = g.n() - matching.size;
    auto tail_of = [&](const Edge& e) { return o.has_arc(e.first, e.second) ? e.first : e.second; };

    BurningSchedule schedule;
    schedule.fires.assign(static_cast<std::size_t>(alpha), -1);

    if (2 * matching.size < g.n()) {
        // unmatched vertices get radii 0 .. alpha-mn-1, tails the rest
        std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
        for (const auto& [u, v] : matching.edges)
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
        int radius = 0;
        for (int v = 0; v < g.n(); ++v)
            if (!covered[static_cast<std::size_t>(v)])
                schedule.fires[static_cast<std::size_t>(radius++)] = v;
        for (const auto& e : matching.edges)
            schedule.fires[static_cast<std::size_t>(radius++)] = tail_of(e);
    } else {
        // perfect matching: mate[] is total
        std::vector<int> mate(static_cast<std::size_t>(g.n()), -1);
        for (const auto& [u, v] : matching.edges) {
            mate[static_cast<std::size_t>(u)] = v;
            mate[static_cast<std::size_t>(v)] = u;
        }
        Edge f{-1, -1};
        for (const auto& [u, v] : g.edges())
            if (mate[static_cast<std::size_t>(u)] != v) {
                f = {u, v};
                break;
            }
        // path a-b-c-d with (a,b) and (c,d) in M, (b,c) = f
        const int a = mate[static_cast<std::size_t>(f.first)], b = f.first;
        const int c = f.second, d = mate[static_cast<std::size_t>(f.second)];
        const int path[4] = {a, b, c, d};
        std::vector<bool> bits(3);
        const Edge local[3] = {{0, 1}, {1, 2}, {2, 3}};
        for (int e = 0; e < 3; ++e)
            bits[static_cast<std::size_t>(e)] =
                o.has_arc(path[local[e].second], path[local[e].first]);
        Orientation p4(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), std::move(bits));
        auto [v0, v2] = p4_fires(p4);
        schedule.fires[0] = path[v0];
        schedule.fires[2] = path[v2];

        const Edge ea{std::min(a, b), std::max(a, b)};
        const Edge eb{std::min(c, d), std::max(c, d)};
        int radius = 1;
        for (const auto& e : matching.edges) {
            if (e == ea || e == eb)
                continue;
            schedule.fires[static_cast<std::size_t>(radius)] = tail_of(e);
            radius = radius == 1 ? 3 : radius + 1;
        }
    }

    if (!verify_schedule(o, schedule))
        throw std::logic_error("ke_schedule: constructed schedule failed verification");
    return schedule;
}

/// obn for König–Egerváry graphs: alpha+1 when the graph is a disjoint
/// union of P2s, alpha otherwise. Delegates to the exhaustive search for
/// n <= 4, where the classification does not apply.
inline ObnResult ke_obn(const Graph& g, const ExactOptions& opts = {}) {
    if (!is_konig_egervary(g))
        throw std::invalid_argument("ke_obn: graph is not König–Egerváry");
    if (g.n() <= 4)
        return obn_exact(g, opts);
    LowerBoundResult lower = lower_bound_alpha(g);
    ObnResult result;
    result.value = is_disjoint_p2s(g) ? lower.value + 1 : lower.value;
    result.witness = std::move(lower.witness);
    result.method = Method::ke_theorem;
    result.explored = 0;
    return result;
}

/// Dispatcher: edgeless graphs are trivial (obn = n), König–Egerváry graphs
/// with n > 4 take the theorem route, everything else is searched exactly.
inline ObnResult solve(const Graph& g, const ExactOptions& opts = {}) {
    if (g.m() == 0) {
        ObnResult result;
        result.value = g.n();
        result.witness = orientation_from_bits(g, 0);
        result.method = Method::trivial;
        return result;
    }
    if (g.n() <= 4)
        return obn_exact(g, opts);
    if (is_konig_egervary(g))
        return ke_obn(g, opts);
    return obn_exact(g, opts);
}

} // namespace obn
