#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obn/graph.hpp"

namespace obn {

/// One direction bit per canonical edge of an underlying Graph:
/// bit false orients edge (u,v) with u < v as u -> v, bit true as v -> u.
/// Immutable after construction; cheap enough to pass by value at the
/// instance sizes this toolkit targets.
class Orientation {
public:
    Orientation() = default;

    Orientation(Graph g, std::vector<bool> bits) : g_(std::move(g)), bits_(std::move(bits)) {
        if (static_cast<int>(bits_.size()) != g_.m())
            throw std::invalid_argument("orientation: bit vector length != edge count");
        out_.assign(static_cast<std::size_t>(g_.n()), {});
        for (int e = 0; e < g_.m(); ++e) {
            auto [tail, head] = arc(e);
            out_[static_cast<std::size_t>(tail)].push_back(head);
        }
        for (auto& nb : out_)
            std::sort(nb.begin(), nb.end());
    }

    const Graph& graph() const { return g_; }
    const std::vector<bool>& bits() const { return bits_; }

    /// Mask form of the bits (bit i of the mask = direction of edge i).
    std::uint64_t mask() const {
        if (g_.m() > 64)
            throw std::invalid_argument("orientation: too many edges for a 64-bit mask");
        std::uint64_t mask = 0;
        for (int e = 0; e < g_.m(); ++e)
            if (bits_[static_cast<std::size_t>(e)])
                mask |= std::uint64_t{1} << e;
        return mask;
    }

    /// (tail, head) of the arc over canonical edge e.
    std::pair<int, int> arc(int e) const {
        const auto& [u, v] = g_.edges().at(static_cast<std::size_t>(e));
        return bits_[static_cast<std::size_t>(e)] ? std::pair{v, u} : std::pair{u, v};
    }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(g_.m()));
        for (int e = 0; e < g_.m(); ++e)
            out.push_back(arc(e));
        return out;
    }

    const std::vector<int>& out_neighbors(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

    bool has_arc(int tail, int head) const {
        int e = g_.edge_index(tail, head);
        if (e < 0)
            return false;
        return arc(e) == std::pair{tail, head};
    }

private:
    Graph g_;
    std::vector<bool> bits_;
    std::vector<std::vector<int>> out_;
};

/// Deterministic bijection between masks in [0, 2^m) and orientations.
inline Orientation orientation_from_bits(const Graph& g, std::uint64_t mask) {
    if (g.m() < 64 && mask >= (std::uint64_t{1} << g.m()))
        throw std::invalid_argument("orientation_from_bits: mask out of range");
    std::vector<bool> bits(static_cast<std::size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e)
        bits[static_cast<std::size_t>(e)] = (mask >> e) & 1;
    return Orientation(g, std::move(bits));
}

/// Orientation from an explicit arc list; every canonical edge must appear
/// exactly once in one of its two directions.
inline Orientation orientation_from_arcs(const Graph& g,
                                         std::span<const std::pair<int, int>> arcs) {
    if (static_cast<int>(arcs.size()) != g.m())
        throw std::invalid_argument("orientation_from_arcs: arc count != edge count");
    std::vector<bool> bits(static_cast<std::size_t>(g.m()));
    std::vector<char> seen(static_cast<std::size_t>(g.m()), 0);
    for (const auto& [tail, head] : arcs) {
        int e = g.edge_index(tail, head);
        if (e < 0)
            throw std::invalid_argument("orientation_from_arcs: arc (" + std::to_string(tail) +
                                        "," + std::to_string(head) + ") is not over an edge");
        if (seen[static_cast<std::size_t>(e)])
            throw std::invalid_argument("orientation_from_arcs: edge oriented twice");
        seen[static_cast<std::size_t>(e)] = 1;
        bits[static_cast<std::size_t>(e)] = tail > head;
    }
    return Orientation(g, std::move(bits));
}

// ---------------------------------------------------------------------------
// Directed distances. Unreachable pairs carry the sentinel n, which is
// strictly greater than any achievable distance.
// ---------------------------------------------------------------------------

inline std::vector<int> out_distances_from(const Orientation& o, int source) {
    const int n = o.graph().n();
    if (source < 0 || source >= n)
        throw std::out_of_range("out_distances_from: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : o.out_neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == n) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

class DistanceMatrix {
public:
    explicit DistanceMatrix(const Orientation& o) : n_(o.graph().n()) {
        rows_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            rows_.push_back(out_distances_from(o, v));
    }

    int n() const { return n_; }
    int unreachable_value() const { return n_; }

    int at(int u, int v) const {
        return rows_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
    }
    bool reachable(int u, int v) const { return at(u, v) < n_; }

private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

inline DistanceMatrix out_distances(const Orientation& o) { return DistanceMatrix(o); }

/// N^+_r[v]: vertices within out-distance r of v, sorted.
inline std::vector<int> ball(const Orientation& o, int v, int radius) {
    if (radius < 0)
        throw std::invalid_argument("ball: negative radius");
    auto dist = out_distances_from(o, v);
    std::vector<int> members;
    for (int u = 0; u < o.graph().n(); ++u)
        if (dist[static_cast<std::size_t>(u)] <= radius)
            members.push_back(u);
    return members;
}

// ---------------------------------------------------------------------------
// Orientation files: underlying edge list followed by either a line
// "mask <decimal>" or by m arc lines "u->v".
// ---------------------------------------------------------------------------

inline std::string write_orientation_mask(const Orientation& o) {
    return write_edge_list(o.graph()) + "mask " + std::to_string(o.mask()) + "\n";
}

inline std::string write_orientation_arcs(const Orientation& o) {
    std::string out = write_edge_list(o.graph());
    for (const auto& [tail, head] : o.arcs())
        out += std::to_string(tail) + "->" + std::to_string(head) + "\n";
    return out;
}

inline Orientation parse_orientation(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("orientation: expected header \"n m\"", 0);
    std::string header = std::to_string(n) + " " + std::to_string(m) + "\n";
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("orientation: truncated edge list", static_cast<std::size_t>(i));
        header += std::to_string(u) + " " + std::to_string(v) + "\n";
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    Graph g = parse_edge_list(header);
    std::string token;
    if (!(in >> token))
        throw ParseError("orientation: missing mask or arc lines", 0);
    if (token == "mask") {
        unsigned long long mask;
        if (!(in >> mask))
            throw ParseError("orientation: bad mask value", 0);
        if (g.m() > 63)
            throw ParseError("orientation: too many edges for mask form", 0);
        if (g.m() < 64 && mask >= (1ull << g.m()))
            throw ParseError("orientation: mask out of range", 0);
        return orientation_from_bits(g, mask);
    }
    std::vector<std::pair<int, int>> arcs;
    for (long long i = 0; i < m; ++i) {
        if (i > 0 && !(in >> token))
            throw ParseError("orientation: expected " + std::to_string(m) + " arc lines",
                             static_cast<std::size_t>(i));
        auto sep = token.find("->");
        if (sep == std::string::npos)
            throw ParseError("orientation: arc line must look like u->v",
                             static_cast<std::size_t>(i));
        try {
            arcs.emplace_back(std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 2)));
        } catch (const std::exception&) {
            throw ParseError("orientation: bad arc line", static_cast<std::size_t>(i));
        }
    }
    try {
        return orientation_from_arcs(g, arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("orientation: ") + e.what(), 0);
    }
}

} // namespace obn
