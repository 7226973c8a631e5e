#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/canonical.hpp"
#include "wsat/graph.hpp"

namespace wsat {

// One representative per isomorphism class of trees on n vertices, ordered
// by canonical form. Built by attaching a leaf to every vertex of every
// (n-1)-vertex tree and deduplicating canonically.
inline std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("enumerate_trees: n must be in [1,12], got " + std::to_string(n));
    std::vector<Graph> cur{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& t : cur) {
            for (int v = 0; v < t.order(); ++v) {
                Graph bigger = t.padded(k);
                bigger.add_edge(v, k - 1);
                std::string key = canonical_form(bigger, 16);
                next.emplace(std::move(key), from_graph6(key));
            }
        }
        cur.clear();
        for (auto& kv : next) cur.push_back(kv.second);
    }
    return cur;
}

// One representative per isomorphism class of graphs with exactly m edges
// and no isolated vertices ("cores"). Grown edge by edge: every m-edge core
// minus an edge, stripped of isolated vertices, is an (m-1)-edge core.
inline std::vector<Graph> enumerate_cores(int m, int max_m = 10) {
    if (m < 1 || m > max_m)
        throw std::invalid_argument("enumerate_cores: m must be in [1," + std::to_string(max_m) +
                                    "], got " + std::to_string(m));
    int cap = std::max(16, 2 * m);
    std::vector<Graph> cur{path_graph(2)};  // the single edge
    for (int k = 2; k <= m; ++k) {
        std::map<std::string, Graph> next;
        auto consider = [&](Graph g) {
            std::string key = canonical_form(g, cap);
            next.emplace(std::move(key), from_graph6(key));
        };
        for (const Graph& c : cur) {
            int nc = c.order();
            // new edge between existing vertices
            for (auto [u, v] : c.non_edges()) {
                Graph g = c;
                g.add_edge(u, v);
                consider(std::move(g));
            }
            // new edge from an existing vertex to a fresh one
            for (int u = 0; u < nc; ++u) {
                Graph g = c.padded(nc + 1);
                g.add_edge(u, nc);
                consider(std::move(g));
            }
            // disjoint fresh edge
            {
                Graph g = c.padded(nc + 2);
                g.add_edge(nc, nc + 1);
                consider(std::move(g));
            }
        }
        cur.clear();
        for (auto& kv : next) cur.push_back(kv.second);
    }
    return cur;
}

}  // namespace wsat
