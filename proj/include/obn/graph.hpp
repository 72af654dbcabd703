#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obn/errors.hpp"

namespace obn {

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph. Edges are kept strictly sorted
/// lexicographically with u < v; that order is the canonical edge order
/// used for orientation bit indexing, so it must never change.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0)
            throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u > v)
                std::swap(u, v);
            if (u == v)
                throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v >= n_)
                throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("graph: duplicate edge");
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Position of edge {u,v} in the canonical order, -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// graph6 codec (standard >=63-offset encoding, short and long size headers)
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t g6_strip_prefix(std::string_view& s) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) == kHeader) {
        s.remove_prefix(kHeader.size());
        return kHeader.size();
    }
    return 0;
}

inline int g6_byte(std::string_view s, std::size_t pos, std::size_t base) {
    if (pos >= s.size())
        throw ParseError("graph6: truncated input", base + pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: character out of range", base + pos);
    return c - 63;
}

} // namespace detail

inline Graph parse_graph6(std::string_view line) {
    std::string_view s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    const std::size_t base = detail::g6_strip_prefix(s);
    if (s.empty())
        throw ParseError("graph6: empty input", base);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int first = detail::g6_byte(s, pos, base);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
        // "~~" + 6 bytes: 36-bit order
        n = 0;
        for (std::size_t k = 0; k < 6; ++k)
            n = (n << 6) | static_cast<std::uint64_t>(detail::g6_byte(s, 2 + k, base));
        if (n < 258048)
            throw ParseError("graph6: malformed header (long form for small order)", base);
        pos = 8;
    } else {
        // "~" + 3 bytes: 18-bit order
        n = 0;
        for (std::size_t k = 0; k < 3; ++k)
            n = (n << 6) | static_cast<std::uint64_t>(detail::g6_byte(s, 1 + k, base));
        if (n < 63)
            throw ParseError("graph6: malformed header (medium form for small order)", base);
        pos = 4;
    }
    if (n > 100000)
        throw ParseError("graph6: order too large for this toolkit", base);

    const int nv = static_cast<int>(n);
    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != pos + nbytes) {
        if (s.size() < pos + nbytes)
            throw ParseError("graph6: truncated input", base + s.size());
        throw ParseError("graph6: trailing data", base + pos + nbytes);
    }

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (int v = 1; v < nv; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            const int within = static_cast<int>(bit % 6);
            const int value = detail::g6_byte(s, byte, base);
            if ((value >> (5 - within)) & 1)
                edges.emplace_back(u, v);
        }
    }
    // padding must be zero
    if (nbits % 6 != 0) {
        const int value = detail::g6_byte(s, s.size() - 1, base);
        const int pad = 6 - static_cast<int>(nbits % 6);
        if (value & ((1 << pad) - 1))
            throw ParseError("graph6: nonzero padding bits", base + s.size() - 1);
    }
    return Graph(nv, std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
    std::string out;
    const std::uint64_t n = static_cast<std::uint64_t>(g.n());
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
    const std::uint64_t nbits = n * (n - 1) / 2;
    std::vector<int> bytes(static_cast<std::size_t>((nbits + 5) / 6), 0);
    std::uint64_t bit = 0;
    for (int v = 1; v < g.n(); ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.has_edge(u, v))
                bytes[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
        }
    }
    for (int b : bytes)
        out.push_back(static_cast<char>(b + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Plain edge-list format: first line "n m", then m lines "u v" (0-based).
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list: expected header \"n m\"", 0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<char> seen;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i),
                             static_cast<std::size_t>(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex out of range in edge " + std::to_string(i),
                             static_cast<std::size_t>(i));
        if (u == v)
            throw ParseError("edge list: loop in edge " + std::to_string(i),
                             static_cast<std::size_t>(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra)
        throw ParseError("edge list: trailing data", static_cast<std::size_t>(m));
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what(), 0);
    }
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Elementary graph operations
// ---------------------------------------------------------------------------

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.n(), std::move(edges));
}

/// Subgraph induced by `vertices`; new labels follow the sorted order of
/// the given set (old vertex sorted(vertices)[i] becomes i).
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.n())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        label[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (label[u] >= 0 && label[v] >= 0)
            edges.emplace_back(label[u], label[v]);
    return Graph(static_cast<int>(vs.size()), std::move(edges));
}

/// Components ordered by their smallest vertex; each component sorted.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// ---------------------------------------------------------------------------
// Small named families used throughout the tests and the CLI fixtures.
// ---------------------------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

/// Star K_{1,leaves}: center is vertex 0, leaves are 1..leaves.
inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), std::move(edges));
}

/// Disjoint union of m copies of P2.
inline Graph matching_graph(int m) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        edges.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * m, std::move(edges));
}

} // namespace obn
