#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "obn/orientation.hpp"

namespace obn {

/// Fires indexed by radius: fires[i] is the fire of radius i.
struct BurningSchedule {
    std::vector<int> fires;

    int length() const { return static_cast<int>(fires.size()); }
};

struct BnResult {
    int value = 0;
    BurningSchedule schedule;
    /// True when the search exhausted the length value-1 space, so the
    /// schedule is provably optimal (re-checkable by brute force for tiny n).
    bool optimality_certified = false;
};

/// True iff the union of N^+_i[fires[i]] covers every vertex.
inline bool verify_schedule(const Orientation& o, const BurningSchedule& s) {
    const int n = o.graph().n();
    std::vector<char> burned(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < s.length(); ++i) {
        int w = s.fires[static_cast<std::size_t>(i)];
        if (w < 0 || w >= n)
            throw std::out_of_range("verify_schedule: fire index out of range");
        auto dist = out_distances_from(o, w);
        for (int v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)] <= i)
                burned[static_cast<std::size_t>(v)] = 1;
    }
    return std::find(burned.begin(), burned.end(), 0) == burned.end();
}

/// Reusable exact burning search over one underlying graph (n <= 64).
/// Load an orientation, then ask decision questions or solve outright;
/// the orientation-enumeration solver reuses one instance across millions
/// of masks to avoid per-orientation allocation.
///
/// Search contract: fires are assigned from the largest radius down,
/// candidates ordered by marginal new coverage (ties: lowest vertex index),
/// pruning a branch as soon as some uncovered vertex is out of reach of
/// every vertex at the largest remaining radius.
class BurnSolver {
public:
    explicit BurnSolver(const Graph& g) : g_(&g), n_(g.n()) {
        if (n_ > 64)
            throw BudgetError("burning: instance too large (n > 64)");
        all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        out_adj_.assign(static_cast<std::size_t>(n_), 0);
        balls_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(n_, 1)), 0);
        coverable_.assign(static_cast<std::size_t>(std::max(n_, 1)), 0);
        fires_.assign(static_cast<std::size_t>(n_) + 1, 0);
    }

    void load_mask(std::uint64_t mask) {
        std::fill(out_adj_.begin(), out_adj_.end(), 0);
        const auto& edges = g_->edges();
        for (int e = 0; e < g_->m(); ++e) {
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            if ((mask >> e) & 1)
                out_adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            else
                out_adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        }
        reset_levels();
    }

    void load(const Orientation& o) {
        std::fill(out_adj_.begin(), out_adj_.end(), 0);
        for (int v = 0; v < n_; ++v)
            for (int w : o.out_neighbors(v))
                out_adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
        reset_levels();
    }

    /// Does a burning schedule of length exactly b exist?
    bool decide(int b, BurningSchedule* schedule = nullptr) {
        if (n_ == 0) {
            // The empty digraph burns with no fires; padding is vacuous.
            if (schedule)
                schedule->fires.clear();
            return b >= 0;
        }
        if (b <= 0)
            return false;
        if (b >= n_) {
            // one fire per vertex always works; pad any excess at vertex 0
            if (schedule) {
                schedule->fires.assign(static_cast<std::size_t>(b), 0);
                for (int v = 0; v < n_; ++v)
                    schedule->fires[static_cast<std::size_t>(v)] = v;
            }
            return true;
        }
        ensure_radius(std::min(b - 1, n_ - 1));
        if (!search(b - 1, all_))
            return false;
        if (schedule)
            schedule->fires.assign(fires_.begin(), fires_.begin() + b);
        return true;
    }

    /// Exact burning number (searched upward from `start`).
    int solve(BurningSchedule* schedule = nullptr, int start = 1) {
        if (n_ == 0) {
            if (schedule)
                schedule->fires.clear();
            return 0;
        }
        for (int b = std::max(start, 1);; ++b)
            if (decide(b, schedule))
                return b; // b = n always succeeds: one fire per vertex
    }

    std::uint64_t ball_bits(int v, int r) {
        ensure_radius(std::min(r, n_ - 1));
        return level(std::min({r, n_ - 1, built_radius_}), v);
    }

private:
    void reset_levels() {
        for (int v = 0; v < n_; ++v)
            balls_[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
        coverable_[0] = all_;
        built_radius_ = 0;
        saturated_ = n_ <= 1;
    }

    std::uint64_t& level(int r, int v) {
        return balls_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v)];
    }

    void ensure_radius(int r) {
        while (!saturated_ && built_radius_ < r) {
            const int next = built_radius_ + 1;
            bool grew = false;
            std::uint64_t cover = 0;
            for (int v = 0; v < n_; ++v) {
                std::uint64_t cur = level(built_radius_, v);
                std::uint64_t grown = cur;
                std::uint64_t frontier = cur;
                while (frontier) {
                    int u = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= out_adj_[static_cast<std::size_t>(u)];
                }
                level(next, v) = grown;
                cover |= grown;
                grew |= grown != cur;
            }
            coverable_[static_cast<std::size_t>(next)] = cover;
            built_radius_ = next;
            if (!grew)
                saturated_ = true;
        }
    }

    std::uint64_t ball_clamped(int v, int r) const {
        return balls_[static_cast<std::size_t>(std::min(r, built_radius_)) *
                          static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v)];
    }

    bool search(int r, std::uint64_t uncovered) {
        if (uncovered == 0) {
            std::fill(fires_.begin(), fires_.begin() + r + 1, 0);
            return true;
        }
        if (r < 0)
            return false;
        const int rr = std::min(r, built_radius_);
        if (uncovered & ~coverable_[static_cast<std::size_t>(rr)])
            return false;
        // candidates by marginal new coverage, ties by lowest index
        auto& cands = cand_stack_[static_cast<std::size_t>(r)];
        cands.clear();
        for (int v = 0; v < n_; ++v) {
            int gain = std::popcount(ball_clamped(v, rr) & uncovered);
            if (gain > 0)
                cands.emplace_back(-gain, v);
        }
        std::stable_sort(cands.begin(), cands.end());
        for (const auto& [neg_gain, v] : cands) {
            fires_[static_cast<std::size_t>(r)] = v;
            if (search(r - 1, uncovered & ~ball_clamped(v, rr)))
                return true;
        }
        return false;
    }

    const Graph* g_;
    int n_;
    std::uint64_t all_;
    std::vector<std::uint64_t> out_adj_;
    std::vector<std::uint64_t> balls_;
    std::vector<std::uint64_t> coverable_;
    int built_radius_ = 0;
    bool saturated_ = false;
    std::vector<int> fires_;
    std::array<std::vector<std::pair<int, int>>, 65> cand_stack_;
};

inline BnResult burning_number(const Orientation& o) {
    BurnSolver solver(o.graph());
    solver.load(o);
    BnResult result;
    result.value = solver.solve(&result.schedule);
    result.optimality_certified = true; // solve() exhausts every shorter length
    return result;
}

inline std::optional<BurningSchedule> burning_decision(const Orientation& o, int b) {
    if (b < 0)
        throw std::invalid_argument("burning_decision: negative length");
    BurnSolver solver(o.graph());
    solver.load(o);
    BurningSchedule schedule;
    if (!solver.decide(b, &schedule))
        return std::nullopt;
    return schedule;
}

// ---------------------------------------------------------------------------
// Tournament kings
// ---------------------------------------------------------------------------

namespace detail {

inline void require_tournament(const Orientation& o, std::span<const int> clique) {
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!o.graph().has_edge(clique[i], clique[j]))
                throw std::invalid_argument("king: vertex set does not induce a tournament");
}

} // namespace detail

/// Is v a king of the tournament induced on `clique`, i.e. does every
/// member lie within two hops of v inside the tournament?
inline bool is_king(const Orientation& o, std::span<const int> clique, int v) {
    detail::require_tournament(o, clique);
    std::vector<int> one_hop{v};
    for (int u : clique)
        if (u != v && o.has_arc(v, u))
            one_hop.push_back(u);
    for (int target : clique) {
        bool hit = false;
        for (int w : one_hop)
            if (w == target || o.has_arc(w, target)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

/// Lowest-indexed vertex of maximum out-degree inside the tournament;
/// such a vertex reaches the whole tournament within two hops.
inline int king(const Orientation& o, std::span<const int> clique) {
    if (clique.empty())
        throw std::invalid_argument("king: empty vertex set");
    detail::require_tournament(o, clique);
    int best = -1, best_deg = -1;
    for (int v : clique) {
        int deg = 0;
        for (int u : clique)
            if (u != v && o.has_arc(v, u))
                ++deg;
        if (deg > best_deg || (deg == best_deg && v < best)) {
            best = v;
            best_deg = deg;
        }
    }
    return best;
}

inline int king(const Orientation& o) {
    std::vector<int> all(static_cast<std::size_t>(o.graph().n()));
    for (int v = 0; v < o.graph().n(); ++v)
        all[static_cast<std::size_t>(v)] = v;
    return king(o, all);
}

/// Schedule of length |cover|+2: two free fires at vertex 0, then one fire
/// per cover part at a king of that part. Always verifies, which is what
/// makes |cover|+2 an upper bound on the burning number.
inline BurningSchedule schedule_from_clique_cover(const Orientation& o,
                                                  const std::vector<std::vector<int>>& cover) {
    const int n = o.graph().n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& part : cover) {
        if (part.empty())
            throw std::invalid_argument("clique cover: empty part");
        for (int v : part) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("clique cover: not a partition of V");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!o.graph().has_edge(part[i], part[j]))
                    throw std::invalid_argument("clique cover: part is not a clique");
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("clique cover: not a partition of V");

    BurningSchedule schedule;
    if (n == 0)
        return schedule;
    schedule.fires = {0, 0};
    for (const auto& part : cover)
        schedule.fires.push_back(king(o, part));
    return schedule;
}

} // namespace obn
