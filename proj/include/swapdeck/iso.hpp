#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swapdeck/errors.hpp"
#include "swapdeck/graph.hpp"
#include "swapdeck/graph6.hpp"

namespace swapdeck {

/// Bijection of vertex labels 0..n-1. images()[v] is the image of v.
class VertexMap {
public:
    VertexMap() = default;

    explicit VertexMap(const std::vector<int>& images) : n_(static_cast<int>(images.size())) {
        if (n_ < 1 || n_ > Graph::kMaxOrder)
            throw Error("VertexMap: bad size");
        std::uint32_t seen = 0;
        for (int v = 0; v < n_; ++v) {
            int w = images[v];
            if (w < 0 || w >= n_ || (seen >> w) & 1u)
                throw Error("VertexMap: not a bijection");
            seen |= 1u << w;
            img_[v] = static_cast<std::uint8_t>(w);
        }
    }

    static VertexMap identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return VertexMap(v);
    }

    static VertexMap transposition(int n, int a, int b) {
        VertexMap m = identity(n);
        std::swap(m.img_[a], m.img_[b]);
        return m;
    }

    int order() const { return n_; }
    int operator()(int v) const { return img_[v]; }

    VertexMap inverse() const {
        VertexMap out;
        out.n_ = n_;
        for (int v = 0; v < n_; ++v) out.img_[img_[v]] = static_cast<std::uint8_t>(v);
        return out;
    }

    /// Composition: apply *this first, then `next`.
    VertexMap then(const VertexMap& next) const {
        if (next.n_ != n_) throw Error("VertexMap: size mismatch in composition");
        VertexMap out;
        out.n_ = n_;
        for (int v = 0; v < n_; ++v) out.img_[v] = next.img_[img_[v]];
        return out;
    }

    Edge map_edge(Edge e) const { return Edge(img_[e.u], img_[e.v]); }

    EdgeSet map_edges(const EdgeSet& s) const {
        EdgeSet out;
        for (Edge e : s) out.insert(map_edge(e));
        return out;
    }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;

    std::string to_string() const {
        std::string out = "[";
        for (int v = 0; v < n_; ++v) {
            if (v) out += " ";
            out += std::to_string(v) + "->" + std::to_string(img_[v]);
        }
        return out + "]";
    }

private:
    int n_ = 0;
    std::array<std::uint8_t, Graph::kMaxOrder> img_{};
};

inline Graph permuted(const Graph& g, const VertexMap& m) {
    if (m.order() != g.order()) throw Error("permuted: map size mismatch");
    std::vector<Edge> edges;
    for (Edge e : g.edges()) edges.push_back(m.map_edge(e));
    return Graph::from_edges(g.order(), edges);
}

/// Label-invariant identifier of an isomorphism class: the graph6 bytes of
/// the canonically relabeled graph (order byte, then canonical upper-triangle
/// bits). Two graphs are isomorphic iff their codes compare equal.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    /// The code doubles as printable graph6 text of the canonical labeling.
    const std::string& g6() const { return bytes_; }

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    std::string bytes_;
};

struct CanonicalLabeling {
    CanonicalCode code;
    VertexMap to_canonical; // maps original labels onto canonical positions
};

namespace detail {

// Backtracking canonical-labeling search. Vertices are partitioned by
// iterative neighborhood-color refinement; branching individualizes each
// member of the first non-singleton cell. Among all orderings reached at the
// leaves, the one whose column-major upper-triangle bit string is
// lexicographically minimal is canonical. Pruning compares the bit columns
// of the fixed prefix against the best leaf so far; a stale "greater"
// verdict is still sound because the best string only ever decreases.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        Cells cells = initial_partition();
        refine(cells);
        recurse(cells, 0, /*prefix_equals_best=*/true);

        std::vector<int> to_canon(n_);
        for (int pos = 0; pos < n_; ++pos) to_canon[best_order_[pos]] = pos;
        VertexMap map{to_canon};
        return CanonicalLabeling{CanonicalCode(graph6::encode(permuted(g_, map))), map};
    }

private:
    using Cells = std::vector<std::vector<std::uint8_t>>;

    Cells initial_partition() const {
        // Group by degree ascending; ties keep label order.
        std::vector<std::pair<int, int>> by_degree;
        for (int v = 0; v < n_; ++v) by_degree.emplace_back(g_.degree(v), v);
        std::stable_sort(by_degree.begin(), by_degree.end());
        Cells cells;
        for (auto [d, v] : by_degree) {
            if (cells.empty() || g_.degree(cells.back().front()) != d) cells.emplace_back();
            cells.back().push_back(static_cast<std::uint8_t>(v));
        }
        return cells;
    }

    // Equitable refinement: split cells by the multiset of neighbor colors,
    // encoded as 4-bit counts per color. Cell order and intra-cell label
    // order stay deterministic and label-equivariant.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed && static_cast<int>(cells.size()) < n_) {
            changed = false;
            std::array<std::uint8_t, Graph::kMaxOrder> color{};
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (std::uint8_t v : cells[ci]) color[v] = static_cast<std::uint8_t>(ci);

            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::uint64_t, std::uint8_t>> keyed;
                keyed.reserve(cell.size());
                for (std::uint8_t v : cell) {
                    std::uint64_t sig = 0;
                    std::uint16_t nb = g_.row(v);
                    while (nb) {
                        int w = std::countr_zero(nb);
                        nb = static_cast<std::uint16_t>(nb & (nb - 1));
                        sig += std::uint64_t{1} << (4 * color[w]);
                    }
                    keyed.emplace_back(sig, v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                const std::size_t before = next.size();
                std::size_t run = 0;
                for (std::size_t i = 1; i <= keyed.size(); ++i) {
                    if (i == keyed.size() || keyed[i].first != keyed[run].first) {
                        next.emplace_back();
                        for (std::size_t j = run; j < i; ++j)
                            next.back().push_back(keyed[j].second);
                        run = i;
                    }
                }
                if (next.size() - before > 1) changed = true;
            }
            cells = std::move(next);
        }
    }

    void recurse(const Cells& cells, int parent_fixed, bool prefix_equals_best) {
        // Positions are determined for the leading run of singleton cells.
        std::array<std::uint8_t, Graph::kMaxOrder> order{};
        int fixed = 0;
        for (const auto& cell : cells) {
            if (cell.size() != 1) break;
            order[fixed++] = cell.front();
        }

        for (int j = parent_fixed; j < fixed; ++j) {
            std::uint16_t col = 0;
            for (int i = 0; i < j; ++i)
                col = static_cast<std::uint16_t>((col << 1) | (g_.has_edge(order[i], order[j]) ? 1 : 0));
            cols_[j] = col;
            if (have_best_ && prefix_equals_best) {
                if (col > best_cols_[j]) return; // cannot beat the current best
                if (col < best_cols_[j]) prefix_equals_best = false;
            }
        }

        if (fixed == n_) {
            if (!have_best_) {
                best_cols_ = cols_;
                best_order_ = order;
                have_best_ = true;
            } else if (!prefix_equals_best) {
                for (int j = 0; j < n_; ++j) {
                    if (cols_[j] == best_cols_[j]) continue;
                    if (cols_[j] < best_cols_[j]) {
                        best_cols_ = cols_;
                        best_order_ = order;
                    }
                    break;
                }
            }
            return;
        }

        std::size_t branch_cell = 0;
        while (cells[branch_cell].size() == 1) ++branch_cell;
        for (std::uint8_t v : cells[branch_cell]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (ci != branch_cell) {
                    child.push_back(cells[ci]);
                    continue;
                }
                child.push_back({v});
                child.emplace_back();
                for (std::uint8_t w : cells[ci])
                    if (w != v) child.back().push_back(w);
            }
            refine(child);
            recurse(child, fixed, prefix_equals_best);
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::array<std::uint16_t, Graph::kMaxOrder> cols_{};
    std::array<std::uint16_t, Graph::kMaxOrder> best_cols_{};
    std::array<std::uint8_t, Graph::kMaxOrder> best_order_{};
};

struct LabeledKey {
    std::uint8_t n;
    std::uint64_t lo, hi;
    friend bool operator==(const LabeledKey&, const LabeledKey&) = default;
};

struct LabeledKeyHash {
    std::size_t operator()(const LabeledKey& k) const {
        std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
        h ^= k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= k.n + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Process-wide memo from labeled adjacency bits to the canonical labeling.
// Purely a cache: presence or absence never changes results. Bounded by a
// full clear once it grows past the cap.
class IsoCache {
public:
    static IsoCache& instance() {
        static IsoCache cache;
        return cache;
    }

    std::optional<CanonicalLabeling> lookup(const LabeledKey& key) {
        std::lock_guard lock(mu_);
        if (!enabled_) return std::nullopt;
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(const LabeledKey& key, const CanonicalLabeling& value) {
        std::lock_guard lock(mu_);
        if (!enabled_) return;
        if (map_.size() >= kMaxEntries) map_.clear();
        map_.emplace(key, value);
    }

    void clear() {
        std::lock_guard lock(mu_);
        map_.clear();
    }

    void enable(bool on) {
        std::lock_guard lock(mu_);
        enabled_ = on;
        if (!on) map_.clear();
    }

    std::size_t size() {
        std::lock_guard lock(mu_);
        return map_.size();
    }

private:
    static constexpr std::size_t kMaxEntries = 1u << 21;
    std::mutex mu_;
    std::unordered_map<LabeledKey, CanonicalLabeling, LabeledKeyHash> map_;
    bool enabled_ = true;
};

} // namespace detail

/// Canonical labeling of g: deterministic, independent of the input
/// labeling. Memoized process-wide.
inline CanonicalLabeling canonical_labeling(const Graph& g) {
    auto [lo, hi] = g.triangle_bits();
    detail::LabeledKey key{static_cast<std::uint8_t>(g.order()), lo, hi};
    if (auto hit = detail::IsoCache::instance().lookup(key)) return *hit;
    CanonicalLabeling result = detail::Canonizer(g).run();
    detail::IsoCache::instance().store(key, result);
    return result;
}

inline CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

/// The canonically relabeled copy of g; encoding it yields the code bytes.
inline Graph canonical_graph(const Graph& g) {
    return permuted(g, canonical_labeling(g).to_canonical);
}

inline void iso_cache_clear() { detail::IsoCache::instance().clear(); }
inline void iso_cache_enable(bool on) { detail::IsoCache::instance().enable(on); }
inline std::size_t iso_cache_size() { return detail::IsoCache::instance().size(); }

namespace detail {

inline std::vector<std::vector<int>> neighbor_degree_profile(const Graph& g) {
    std::vector<std::vector<int>> prof(g.order());
    for (int v = 0; v < g.order(); ++v) {
        for (int w = 0; w < g.order(); ++w)
            if (g.has_edge(v, w)) prof[v].push_back(g.degree(w));
        std::sort(prof[v].begin(), prof[v].end());
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

} // namespace detail

/// Isomorphism test with witness. Returns a vertex map carrying E(g) onto
/// E(h) exactly, or nothing when the graphs are not isomorphic. Cheap
/// invariants (order, size, degree sequence, neighbor-degree profile) reject
/// most non-isomorphic pairs before any search runs.
inline std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    if (detail::neighbor_degree_profile(g) != detail::neighbor_degree_profile(h))
        return std::nullopt;

    CanonicalLabeling lg = canonical_labeling(g);
    CanonicalLabeling lh = canonical_labeling(h);
    if (lg.code != lh.code) return std::nullopt;

    VertexMap witness = lg.to_canonical.then(lh.to_canonical.inverse());
    if (permuted(g, witness) != h)
        throw std::logic_error("are_isomorphic: witness failed replay check");
    return witness;
}

} // namespace swapdeck
