#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// Iterated degree refinement. Returned color ids depend only on the
// isomorphism type, so they are comparable across graphs.
inline std::vector<int> refinement_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    {
        // compress initial degrees to dense ids by sorted value
        std::vector<int> vals(color);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int v = 0; v < n; ++v)
            color[v] = int(std::lower_bound(vals.begin(), vals.end(), color[v]) - vals.begin());
    }
    int ncolors = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (next == ncolors) break;
        ncolors = next;
    }
    return color;
}

namespace detail {

// Canonical labeling of one connected (or arbitrary small) graph by
// backtracking over color-respecting placements with prefix pruning and
// twin skipping. Returns perm with perm[old] = position.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
        auto color = refinement_colors(g);
        // positions grouped by ascending color id
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        pos_color_.resize(n_);
        for (int p = 0; p < n_; ++p) pos_color_[p] = color[order[p]];
        color_ = color;
        // pairwise twin relation: swapping u and v is an automorphism
        twin_.assign(size_t(n_) * n_, false);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (color[u] != color[v]) continue;
                bool tw = true;
                for (int wi = 0; wi < g.row_words() && tw; ++wi) {
                    uint64_t mask = ~uint64_t{0};
                    uint64_t bits_uv = 0;
                    if ((u >> 6) == wi) bits_uv |= uint64_t{1} << (u & 63);
                    if ((v >> 6) == wi) bits_uv |= uint64_t{1} << (v & 63);
                    mask &= ~bits_uv;
                    if ((g.row(u)[wi] & mask) != (g.row(v)[wi] & mask)) tw = false;
                }
                twin_[size_t(u) * n_ + v] = twin_[size_t(v) * n_ + u] = tw;
            }
        total_bits_ = n_ * (n_ - 1) / 2;
        cur_.assign(total_bits_, 0);
        best_.clear();
        perm_.assign(n_, -1);
        placed_.assign(n_, -1);
        best_perm_.assign(n_, -1);
    }

    std::vector<int> run() {
        dfs(0, /*state_less=*/false, /*state_version=*/0);
        std::vector<int> out(n_);
        for (int p = 0; p < n_; ++p) out[best_perm_[p]] = p;
        return out;  // out[old_vertex] = position
    }

private:
    void dfs(int p, bool state_less, uint64_t state_version) {
        if (state_version != version_) {
            // best was replaced below an ancestor: new best extends our prefix
            state_less = false;
            state_version = version_;
        }
        if (p == n_) {
            if (best_.empty() || state_less) {
                best_ = cur_;
                best_perm_.assign(placed_.begin(), placed_.end());
                ++version_;
            }
            return;
        }
        int offset = p * (p - 1) / 2;
        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (perm_[v] >= 0 || color_[v] != pos_color_[p]) continue;
            bool skip = false;
            for (int u : tried)
                if (twin_[size_t(u) * n_ + v]) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            // adjacency bits of v against already placed vertices
            for (int i = 0; i < p; ++i) cur_[offset + i] = g_.has_edge(v, placed_[i]) ? 1 : 0;
            bool child_less = state_less;
            uint64_t child_version = state_version;
            if (child_version != version_) {
                child_less = false;
                child_version = version_;
            }
            if (!child_less && !best_.empty()) {
                int cmp = 0;
                for (int i = 0; i < p && cmp == 0; ++i)
                    cmp = int(cur_[offset + i]) - int(best_[offset + i]);
                if (cmp > 0) continue;  // prune
                if (cmp < 0) child_less = true;
            }
            perm_[v] = p;
            placed_[p] = v;
            dfs(p + 1, child_less, child_version);
            perm_[v] = -1;
            placed_[p] = -1;
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> color_, pos_color_;
    std::vector<char> twin_;
    std::vector<uint8_t> cur_, best_;
    std::vector<int> perm_, placed_, best_perm_;
    uint64_t version_ = 1;
};

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = int(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

}  // namespace detail

// Canonical labeling: perm[old] = new, such that relabeled graphs of
// isomorphic inputs coincide. Components are canonicalized separately and
// concatenated in sorted order.
inline std::vector<int> canonical_labeling(const Graph& g, int vertex_cap = 16) {
    if (g.order() > vertex_cap)
        throw std::invalid_argument("canonical_labeling: vertex cap " + std::to_string(vertex_cap) +
                                    " exceeded (n=" + std::to_string(g.order()) + ")");
    auto comps = detail::connected_components(g);
    struct Piece {
        std::string key;
        std::vector<int> members;   // original vertex ids, sorted
        std::vector<int> local;     // local canonical position per member index
    };
    std::vector<Piece> pieces;
    for (auto& members : comps) {
        Graph sub = g.induced(members);
        detail::CanonSearch cs(sub);
        auto local = cs.run();
        Graph canon = sub.relabeled(local);
        pieces.push_back({to_graph6(canon), members, local});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.key < b.key;
    });
    std::vector<int> perm(g.order(), -1);
    int offset = 0;
    for (auto& pc : pieces) {
        for (size_t i = 0; i < pc.members.size(); ++i)
            perm[pc.members[i]] = offset + pc.local[i];
        offset += int(pc.members.size());
    }
    return perm;
}

// Equal byte strings iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g, int vertex_cap = 16) {
    return to_graph6(g.relabeled(canonical_labeling(g, vertex_cap)));
}

inline bool are_isomorphic(const Graph& a, const Graph& b, int vertex_cap = 16) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, vertex_cap) == canonical_form(b, vertex_cap);
}

}  // namespace wsat
