#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// End-star: an induced K_{1,s} whose center has degree s+1 in the pattern
// and whose s outer vertices are pattern leaves.
struct EndStar {
    int center;
    int pendant_count;  // s
};

struct PlanStep {
    int pattern_vertex;
    std::vector<int> earlier_neighbor_positions;  // indices into the placement order
    int pattern_degree;
};

// Placement order for one anchored search: position 0 and 1 are the anchor
// endpoints, the rest follow in BFS order so every step has a placed neighbor.
struct EmbedPlan {
    int x, y;
    std::vector<PlanStep> steps;
};

// A connected pattern graph with cached structure used all over: degrees,
// leaves, end-stars, minimum end-degree, and per-anchor search plans.
class Pattern {
public:
    explicit Pattern(Graph g) : g_(std::move(g)) {
        int n = g_.order();
        if (n < 2 || g_.edge_count() < 1)
            throw std::invalid_argument("Pattern: need a connected graph with at least one edge");
        if (!g_.is_connected()) throw std::invalid_argument("Pattern: graph must be connected");
        deg_ = g_.degrees();
        max_degree_ = *std::max_element(deg_.begin(), deg_.end());
        min_degree_ = *std::min_element(deg_.begin(), deg_.end());
        for (int v = 0; v < n; ++v)
            if (deg_[v] == 1) leaves_.push_back(v);
        leaf_mask_ = Bitset(n);
        for (int v : leaves_) leaf_mask_.set(v);
        for (int v = 0; v < n; ++v) {
            if (deg_[v] < 2) continue;
            int leaf_nbrs = 0;
            for (int u : g_.neighbors(v))
                if (deg_[u] == 1) ++leaf_nbrs;
            if (leaf_nbrs >= deg_[v] - 1) end_stars_.push_back({v, deg_[v] - 1});
        }
        for (const auto& es : end_stars_) {
            int center_degree = es.pendant_count + 1;
            if (!min_end_degree_ || center_degree < *min_end_degree_)
                min_end_degree_ = center_degree;
        }
        edges_ = g_.edges();
        is_tree_ = g_.is_tree();
        diameter_ = g_.diameter();
        build_twin_orbits();
        build_plans();
    }

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }
    int edge_count() const { return g_.edge_count(); }
    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }
    int degree(int v) const { return deg_[v]; }
    const std::vector<int>& leaves() const { return leaves_; }
    bool is_leaf(int v) const { return deg_[v] == 1; }
    const std::vector<EndStar>& end_stars() const { return end_stars_; }
    std::optional<int> min_end_degree() const { return min_end_degree_; }
    bool is_tree_pattern() const { return is_tree_; }
    int diameter() const { return diameter_; }
    const std::vector<Edge>& edge_list() const { return edges_; }
    bool single_edge() const { return g_.edge_count() == 1; }

    // plans_[2*edge_index] anchors (x,y), plans_[2*edge_index+1] anchors (y,x)
    const EmbedPlan& plan(size_t edge_index, bool flipped) const {
        return plans_[2 * edge_index + (flipped ? 1 : 0)];
    }

    // One representative per provably-equivalent edge class. Two edges are
    // grouped only when matching endpoints are twins (swapping them is an
    // automorphism), so anchoring the representatives loses nothing.
    const std::vector<size_t>& anchor_edges() const { return anchor_edges_; }

private:
    void build_twin_orbits() {
        int n = g_.order();
        // pairwise twin test: rows equal once both endpoints are masked
        const Graph& cg = g_;
        auto twins = [&](int u, int v) {
            if (deg_[u] != deg_[v]) return false;
            for (int wi = 0; wi < cg.row_words(); ++wi) {
                uint64_t mask = ~uint64_t{0};
                if ((u >> 6) == wi) mask &= ~(uint64_t{1} << (u & 63));
                if ((v >> 6) == wi) mask &= ~(uint64_t{1} << (v & 63));
                if ((cg.row(u)[wi] & mask) != (cg.row(v)[wi] & mask)) return false;
            }
            return true;
        };
        std::vector<int> cls(n, -1);
        std::vector<std::vector<int>> members;
        for (int v = 0; v < n; ++v) {
            for (size_t c = 0; c < members.size(); ++c) {
                bool all = true;
                for (int u : members[c])
                    if (!twins(u, v)) {
                        all = false;
                        break;
                    }
                if (all) {
                    cls[v] = int(c);
                    members[c].push_back(v);
                    break;
                }
            }
            if (cls[v] < 0) {
                cls[v] = int(members.size());
                members.push_back({v});
            }
        }
        std::set<std::pair<int, int>> seen;
        for (size_t i = 0; i < edges_.size(); ++i) {
            auto [x, y] = edges_[i];
            auto key = std::minmax(cls[x], cls[y]);
            if (seen.insert({key.first, key.second}).second) anchor_edges_.push_back(i);
        }
    }

    void build_plans() {
        plans_.reserve(edges_.size() * 2);
        for (auto [x, y] : edges_) {
            plans_.push_back(make_plan(x, y));
            plans_.push_back(make_plan(y, x));
        }
    }

    EmbedPlan make_plan(int x, int y) const {
        int n = g_.order();
        EmbedPlan plan;
        plan.x = x;
        plan.y = y;
        std::vector<int> pos(n, -1);
        pos[x] = 0;
        pos[y] = 1;
        std::vector<int> order{x, y};
        for (size_t head = 0; head < order.size(); ++head) {
            for (int u : g_.neighbors(order[head])) {
                if (pos[u] >= 0) continue;
                pos[u] = int(order.size());
                order.push_back(u);
            }
        }
        for (size_t i = 2; i < order.size(); ++i) {
            PlanStep step;
            step.pattern_vertex = order[i];
            step.pattern_degree = deg_[order[i]];
            for (int u : g_.neighbors(order[i]))
                if (pos[u] >= 0 && pos[u] < int(i)) step.earlier_neighbor_positions.push_back(pos[u]);
            plan.steps.push_back(std::move(step));
        }
        return plan;
    }

    Graph g_;
    std::vector<int> deg_;
    int max_degree_ = 0, min_degree_ = 0;
    std::vector<int> leaves_;
    Bitset leaf_mask_;
    std::vector<EndStar> end_stars_;
    std::optional<int> min_end_degree_;
    std::vector<Edge> edges_;
    bool is_tree_ = false;
    int diameter_ = 0;
    std::vector<size_t> anchor_edges_;
    std::vector<EmbedPlan> plans_;
};

// ---------------------------------------------------------------------------
// Caterpillars.

struct CaterpillarSpec {
    std::vector<int> a;  // pendant counts along the spine

    int spine_length() const { return int(a.size()); }
    int vertex_count() const {
        int t = spine_length();
        for (int x : a) t += x;
        return t;
    }
    bool nondegenerate() const {
        if (a.empty()) return false;
        for (int x : a)
            if (x <= 0) return false;
        return true;
    }
    int min_pendants() const { return *std::min_element(a.begin(), a.end()); }
    int min_nonzero_pendants() const {
        int best = -1;
        for (int x : a)
            if (x > 0 && (best < 0 || x < best)) best = x;
        return best;
    }
    Graph to_graph() const { return caterpillar_graph(a); }

    std::string to_string() const {
        std::string s = "cat:";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s;
    }

    // Structural recognition: a tree is a caterpillar iff its internal tree
    // is a path (possibly a single vertex or empty). The spine here is the
    // internal path, so a recognized spec never has pendant-free spine ends.
    static std::optional<CaterpillarSpec> recognize(const Graph& t);
};

struct TreeFeatures {
    std::vector<int> leaves;
    std::vector<int> degree_sequence;  // ascending
    int diameter = 0;
    bool parity_ok = false;     // all pairwise leaf distances even
    bool has_p2_leaf = false;   // some leaf sits next to a degree-2 vertex
    Graph internal_tree;
    std::vector<int> internal_vertices;  // original labels, ascending
    std::vector<int> leaf_support;       // U: vertices adjacent to a leaf
    int min_leaf_support = 0;            // d: least leaf count over U
    std::optional<int> min_end_degree;   // delta_e
    int red_count = 0, blue_count = 0;   // populated when parity_ok
};

inline TreeFeatures tree_features(const Graph& t) {
    if (!t.is_tree() || t.order() < 2)
        throw std::invalid_argument("tree_features: input must be a tree with at least 2 vertices");
    TreeFeatures f;
    int n = t.order();
    auto deg = t.degrees();
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) f.leaves.push_back(v);
    f.degree_sequence = deg;
    std::sort(f.degree_sequence.begin(), f.degree_sequence.end());
    f.diameter = t.diameter();
    for (int v = 0; v < n; ++v) {
        if (deg[v] <= 1) continue;
        f.internal_vertices.push_back(v);
    }
    f.internal_tree = t.induced(f.internal_vertices);
    std::vector<int> leaf_count(n, 0);
    for (int leaf : f.leaves)
        for (int u : t.neighbors(leaf)) ++leaf_count[u];
    for (int v = 0; v < n; ++v)
        if (leaf_count[v] > 0) f.leaf_support.push_back(v);
    f.min_leaf_support = 0;
    for (int v : f.leaf_support)
        if (f.min_leaf_support == 0 || leaf_count[v] < f.min_leaf_support)
            f.min_leaf_support = leaf_count[v];
    for (int leaf : f.leaves)
        for (int u : t.neighbors(leaf))
            if (deg[u] == 2) f.has_p2_leaf = true;
    // parity: root the bipartition at a leaf; all leaf distances are even
    // exactly when every leaf lands in the root's class
    auto dist = t.bfs_distances(f.leaves.front());
    f.parity_ok = true;
    for (int leaf : f.leaves)
        if (dist[leaf] % 2 != 0) f.parity_ok = false;
    if (f.parity_ok) {
        for (int v = 0; v < n; ++v)
            (dist[v] % 2 == 0 ? f.red_count : f.blue_count)++;
    }
    Pattern p(t);
    f.min_end_degree = p.min_end_degree();
    return f;
}

inline std::optional<CaterpillarSpec> CaterpillarSpec::recognize(const Graph& t) {
    if (!t.is_tree() || t.order() < 2) return std::nullopt;
    if (t.order() == 2) return CaterpillarSpec{{1}};
    auto deg = t.degrees();
    std::vector<int> internal;
    for (int v = 0; v < t.order(); ++v)
        if (deg[v] >= 2) internal.push_back(v);
    Graph it = t.induced(internal);
    for (int v = 0; v < it.order(); ++v)
        if (it.degree(v) > 2) return std::nullopt;
    if (!it.is_connected()) return std::nullopt;  // cannot happen in a tree; belt and braces
    // walk the internal path from one endpoint
    std::vector<int> path_order;
    if (it.order() == 1) {
        path_order = {0};
    } else {
        int start = 0;
        for (int v = 0; v < it.order(); ++v)
            if (it.degree(v) <= 1) start = v;
        int prev = -1, cur = start;
        while (true) {
            path_order.push_back(cur);
            int nxt = -1;
            for (int u : it.neighbors(cur))
                if (u != prev) nxt = u;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        if (int(path_order.size()) != it.order()) return std::nullopt;
    }
    std::vector<int> a;
    for (int local : path_order) {
        int orig = internal[local];
        int cnt = 0;
        for (int u : t.neighbors(orig))
            if (deg[u] == 1) ++cnt;
        a.push_back(cnt);
    }
    std::vector<int> rev(a.rbegin(), a.rend());
    if (rev < a) a = rev;
    return CaterpillarSpec{a};
}

}  // namespace wsat
