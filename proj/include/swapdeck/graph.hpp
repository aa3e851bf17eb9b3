#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "swapdeck/errors.hpp"

namespace swapdeck {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    std::uint8_t u = 0;
    std::uint8_t v = 0;

    Edge() = default;
    Edge(int a, int b)
        : u(static_cast<std::uint8_t>(std::min(a, b))),
          v(static_cast<std::uint8_t>(std::max(a, b))) {
        if (a == b || a < 0 || b < 0)
            throw Error("Edge: endpoints must be distinct and non-negative");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;

    std::string to_string() const {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
};

/// Set of edges, kept sorted and duplicate-free.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges) {
        for (Edge e : edges) insert(e);
    }
    explicit EdgeSet(std::vector<Edge> edges) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
    }

    void insert(Edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) edges_.insert(it, e);
    }

    bool contains(Edge e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i) out += ",";
            out += edges_[i].to_string();
        }
        return out + "}";
    }

private:
    std::vector<Edge> edges_;
};

/// Simple undirected graph on a fixed labeled vertex set, at most 16
/// vertices, one adjacency bitmask row per vertex. Graphs are immutable
/// values: every edit returns a new graph.
class Graph {
public:
    static constexpr int kMaxOrder = 16;

    explicit Graph(int order) : order_(check_order(order)) { adj_.fill(0); }

    static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(order);
        for (auto [a, b] : edges) g.set_edge(Edge(a, b));
        return g;
    }
    static Graph from_edges(int order, const std::vector<Edge>& edges) {
        Graph g(order);
        for (Edge e : edges) g.set_edge(e);
        return g;
    }

    int order() const { return order_; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= order_ || v >= order_) return false;
        return u != v && ((adj_[u] >> v) & 1u);
    }
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    /// Adjacency row of v as a bitmask over vertex indices.
    std::uint16_t row(int v) const { return adj_[v]; }

    int degree(int v) const { return std::popcount(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < order_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// All edges, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// All non-adjacent vertex pairs, sorted.
    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Degrees sorted ascending.
    std::vector<int> degree_sequence() const {
        std::vector<int> d(order_);
        for (int v = 0; v < order_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    /// Upper-triangle adjacency bits in column-major order (x01, x02, x12,
    /// x03, ...) packed little-endian into two words. Used as a compact
    /// labeled-graph key; the bit order matches the graph6 body.
    std::pair<std::uint64_t, std::uint64_t> triangle_bits() const {
        std::uint64_t lo = 0, hi = 0;
        int pos = 0;
        for (int v = 1; v < order_; ++v)
            for (int u = 0; u < v; ++u, ++pos)
                if (has_edge(u, v)) {
                    if (pos < 64)
                        lo |= std::uint64_t{1} << pos;
                    else
                        hi |= std::uint64_t{1} << (pos - 64);
                }
        return {lo, hi};
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.order_ != b.order_) return false;
        return std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
    }

    friend bool operator<(const Graph& a, const Graph& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return std::lexicographical_compare(a.adj_.begin(), a.adj_.begin() + a.order_,
                                            b.adj_.begin(), b.adj_.begin() + b.order_);
    }

private:
    static int check_order(int order) {
        if (order < 1) throw Error("Graph: order must be at least 1");
        if (order > kMaxOrder) throw OrderTooLarge("Graph: order exceeds 16");
        return order;
    }

    void set_edge(Edge e) {
        check_endpoints(e);
        adj_[e.u] = static_cast<std::uint16_t>(adj_[e.u] | (1u << e.v));
        adj_[e.v] = static_cast<std::uint16_t>(adj_[e.v] | (1u << e.u));
    }
    void clear_edge(Edge e) {
        check_endpoints(e);
        adj_[e.u] = static_cast<std::uint16_t>(adj_[e.u] & ~(1u << e.v));
        adj_[e.v] = static_cast<std::uint16_t>(adj_[e.v] & ~(1u << e.u));
    }
    void check_endpoints(Edge e) const {
        if (e.v >= order_)
            throw Error("edge endpoint " + std::to_string(e.v) + " out of range for order " +
                        std::to_string(order_));
    }

    std::uint8_t order_;
    std::array<std::uint16_t, kMaxOrder> adj_{};

    friend Graph remove_edges(const Graph&, const EdgeSet&);
    friend Graph add_edges(const Graph&, const EdgeSet&);
    friend Graph complement(const Graph&);
};

/// Deletes every edge of `a` from `g`. Throws MissingEdge if one is absent
/// (an out-of-range endpoint counts as absent).
inline Graph remove_edges(const Graph& g, const EdgeSet& a) {
    Graph out = g;
    for (Edge e : a) {
        if (e.v >= g.order() || !g.has_edge(e))
            throw MissingEdge("remove_edges: " + e.to_string() + " not present");
        out.clear_edge(e);
    }
    return out;
}

/// Adds every edge of `b` to `g`. Throws DuplicateEdge if one is already there.
inline Graph add_edges(const Graph& g, const EdgeSet& b) {
    Graph out = g;
    for (Edge e : b) {
        if (e.v >= g.order())
            throw Error("add_edges: endpoint out of range");
        if (g.has_edge(e))
            throw DuplicateEdge("add_edges: " + e.to_string() + " already present");
        out.set_edge(e);
    }
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    const std::uint16_t all = static_cast<std::uint16_t>((1u << g.order()) - 1);
    for (int v = 0; v < g.order(); ++v)
        out.adj_[v] = static_cast<std::uint16_t>((~g.row(v) & all) & ~(1u << v));
    return out;
}

/// Degree profile and the basic structural predicates of a graph.
struct StructuralReport {
    std::vector<int> degrees;   // sorted ascending
    bool is_regular = false;
    int regular_degree = -1;    // r when regular, -1 otherwise
    bool is_connected = false;
    bool is_bipartite = false;
};

inline StructuralReport structural_report(const Graph& g) {
    StructuralReport rep;
    rep.degrees = g.degree_sequence();
    rep.is_regular = rep.degrees.front() == rep.degrees.back();
    if (rep.is_regular) rep.regular_degree = rep.degrees.front();

    const int n = g.order();
    // Connectivity: bitmask BFS from vertex 0. Order 1 is connected.
    std::uint16_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= g.row(v);
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= next;
    }
    rep.is_connected = seen == static_cast<std::uint16_t>((1u << n) - 1);

    // 2-coloring over every component.
    std::array<int, Graph::kMaxOrder> color{};
    color.fill(-1);
    rep.is_bipartite = true;
    for (int s = 0; s < n && rep.is_bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && rep.is_bipartite) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!g.has_edge(v, w)) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    rep.is_bipartite = false;
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace swapdeck
