#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

// Deterministic RNG with portable bounded draws (library distributions are
// not pinned across standard libraries).
struct Rng {
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t bound) { return bound ? eng() % bound : 0; }
    std::mt19937_64 eng;
};

struct CertStep {
    Edge edge;
    std::vector<int> map;  // pattern vertex -> host vertex
};

// One concrete bootstrap-percolation run: initial edges plus the ordered
// edge additions, each carrying its witness embedding.
struct Certificate {
    std::string pattern_g6;
    int n = 0;
    std::vector<Edge> initial;
    std::vector<CertStep> steps;
};

struct VerifyResult {
    bool ok = false;
    int failed_step = -1;  // -1: no step failed
    std::string reason;
    bool final_complete = false;
};

// Checks one embedding by replay: injective, all pattern edges present in
// the host, and the anchor edge covered by a pattern edge.
inline bool embedding_valid(const Pattern& F, const Graph& g, const std::vector<int>& map,
                            Edge anchor, std::string* why = nullptr) {
    auto fail = [&](const std::string& r) {
        if (why) *why = r;
        return false;
    };
    if (int(map.size()) != F.order()) return fail("map size mismatch");
    Bitset used(g.order());
    for (int h : map) {
        if (h < 0 || h >= g.order()) return fail("map image out of range");
        if (used.test(h)) return fail("map not injective");
        used.set(h);
    }
    bool covered = false;
    for (auto [x, y] : F.edge_list()) {
        if (!g.has_edge(map[x], map[y]))
            return fail("pattern edge " + std::to_string(x) + "-" + std::to_string(y) +
                        " not present in host");
        if (make_edge(map[x], map[y]) == anchor) covered = true;
    }
    if (!covered) return fail("added edge not covered by the new copy");
    return true;
}

namespace detail {

// State shared by one anchored search: placement by position (0 = anchor x,
// 1 = anchor y, then plan steps), the used-vertex mask, and a scratch
// buffer for candidate masks.
struct EmbedSearcher {
    const Pattern& F;
    const Graph& G;
    const std::vector<int>& host_degree;
    std::vector<int> placed;
    Bitset used;
    std::vector<uint64_t> mask_buf;

    EmbedSearcher(const Pattern& f, const Graph& g, const std::vector<int>& hd)
        : F(f), G(g), host_degree(hd), used(g.order()) {
        mask_buf.assign(size_t(F.order()) * G.row_words(), 0);
    }
};

}  // namespace detail

// Finds an embedding of F into G whose image contains the host edge (u,v)
// as the image of a pattern edge; absent if none exists. Deterministic:
// anchors are tried in pattern-edge order, candidates in ascending host order.
inline std::optional<std::vector<int>> anchored_embedding(const Pattern& F, const Graph& G, int u,
                                                          int v) {
    if (!G.has_edge(u, v))
        throw std::invalid_argument("anchored_embedding: (u,v) must be an edge of the host");
    if (F.order() > G.order()) return std::nullopt;
    if (F.single_edge()) {
        auto [x, y] = F.edge_list().front();
        std::vector<int> map(F.order());
        map[x] = u;
        map[y] = v;
        return map;
    }
    std::vector<int> host_degree = G.degrees();

    for (size_t ei : F.anchor_edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            const EmbedPlan& plan = F.plan(ei, flip != 0);
            if (host_degree[u] < F.degree(plan.x) || host_degree[v] < F.degree(plan.y)) continue;
            detail::EmbedSearcher s(F, G, host_degree);
            s.placed.assign(2 + plan.steps.size(), -1);
            s.placed[0] = u;
            s.placed[1] = v;
            s.used.set(u);
            s.used.set(v);

            struct Rec {
                detail::EmbedSearcher& s;
                const EmbedPlan& plan;
                const Graph& G;
                bool run(size_t si) {
                    if (si == plan.steps.size()) return true;
                    const PlanStep& st = plan.steps[si];
                    int words = G.row_words();
                    uint64_t* mask = s.mask_buf.data() + si * words;
                    const uint64_t* first = G.row(s.placed[st.earlier_neighbor_positions[0]]);
                    for (int i = 0; i < words; ++i) mask[i] = first[i];
                    for (size_t k = 1; k < st.earlier_neighbor_positions.size(); ++k) {
                        const uint64_t* r = G.row(s.placed[st.earlier_neighbor_positions[k]]);
                        for (int i = 0; i < words; ++i) mask[i] &= r[i];
                    }
                    for (int i = 0; i < words; ++i) mask[i] &= ~s.used.data()[i];
                    for (int wi = 0; wi < words; ++wi) {
                        uint64_t w = mask[wi];
                        while (w) {
                            int c = (wi << 6) + __builtin_ctzll(w);
                            w &= w - 1;
                            if (s.host_degree[c] < st.pattern_degree) continue;
                            s.placed[si + 2] = c;
                            s.used.set(c);
                            if (run(si + 1)) return true;
                            s.used.reset(c);
                        }
                    }
                    s.placed[si + 2] = -1;
                    return false;
                }
            } rec{s, plan, G};

            if (rec.run(0)) {
                std::vector<int> map(F.order(), -1);
                map[plan.x] = u;
                map[plan.y] = v;
                for (size_t i = 0; i < plan.steps.size(); ++i)
                    map[plan.steps[i].pattern_vertex] = s.placed[i + 2];
                return map;
            }
        }
    }
    return std::nullopt;
}

// Non-edges e such that G + e contains a new copy of F through e.
inline std::vector<std::pair<Edge, std::vector<int>>> addable_edges_with_witness(const Graph& g,
                                                                                 const Pattern& F) {
    std::vector<std::pair<Edge, std::vector<int>>> out;
    Graph work = g;
    for (auto [u, v] : g.non_edges()) {
        work.add_edge(u, v);
        auto emb = anchored_embedding(F, work, u, v);
        work.remove_edge(u, v);
        if (emb) out.push_back({{u, v}, std::move(*emb)});
    }
    return out;
}

inline std::vector<Edge> addable_edges(const Graph& g, const Pattern& F) {
    std::vector<Edge> out;
    for (auto& [e, w] : addable_edges_with_witness(g, F)) out.push_back(e);
    return out;
}

struct ClosureResult {
    Graph graph;
    Certificate certificate;
};

using EdgeKeyFn = std::function<uint64_t(Edge)>;

inline uint64_t lex_edge_key(Edge e) { return (uint64_t(e.first) << 32) | uint64_t(e.second); }

// Bootstrap percolation closure. Repeatedly adds the addable edge with the
// smallest key (lexicographic by default). Witnesses found earlier stay
// valid because addability is monotone under edge additions. A frontier
// limits retesting after each addition; a full sweep at every empty queue
// confirms the fixed point.
inline ClosureResult closure_with_key(const Graph& g0, const Pattern& F, const EdgeKeyFn& key) {
    Graph g = g0;
    Certificate cert;
    cert.pattern_g6 = to_graph6(F.graph());
    cert.n = g.order();
    cert.initial = g.edges();

    std::map<Edge, std::vector<int>> witness;
    std::set<std::pair<uint64_t, Edge>> queue;
    Graph probe = g;

    auto test_edge = [&](Edge e) {
        if (witness.count(e)) return;
        auto [u, v] = e;
        probe.add_edge(u, v);
        auto emb = anchored_embedding(F, probe, u, v);
        probe.remove_edge(u, v);
        if (emb) {
            witness.emplace(e, std::move(*emb));
            queue.insert({key(e), e});
        }
    };

    auto full_scan = [&]() {
        for (auto e : g.non_edges()) test_edge(e);
    };

    full_scan();
    bool added_since_scan = false;
    int frontier_radius = F.order() - 1;
    while (true) {
        if (queue.empty()) {
            if (!added_since_scan) break;
            full_scan();
            added_since_scan = false;
            if (queue.empty()) break;
        }
        auto [k, e] = *queue.begin();
        queue.erase(queue.begin());
        auto node = witness.extract(e);
        g.add_edge(e.first, e.second);
        probe.add_edge(e.first, e.second);
        cert.steps.push_back({e, std::move(node.mapped())});
        added_since_scan = true;

        // retest non-edges with an endpoint near the new edge
        auto da = g.bfs_distances(e.first);
        auto db = g.bfs_distances(e.second);
        auto near = [&](int x) {
            return (da[x] >= 0 && da[x] <= frontier_radius) ||
                   (db[x] >= 0 && db[x] <= frontier_radius);
        };
        for (auto f : g.non_edges())
            if (near(f.first) || near(f.second)) test_edge(f);
    }
    return {std::move(g), std::move(cert)};
}

inline ClosureResult closure(const Graph& g0, const Pattern& F) {
    return closure_with_key(g0, F, lex_edge_key);
}

// Closure under a seeded random priority; the fixed point must not depend
// on the order.
inline ClosureResult closure_shuffled(const Graph& g0, const Pattern& F, uint64_t seed) {
    int n = g0.order();
    std::vector<uint64_t> rank(size_t(n) * n, 0);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    Rng rng(seed);
    for (size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.next(i)]);
    for (size_t i = 0; i < all.size(); ++i) rank[size_t(all[i].first) * n + all[i].second] = i;
    return closure_with_key(g0, F, [n, rank](Edge e) {
        return rank[size_t(e.first) * n + e.second];
    });
}

inline bool is_weakly_saturated(const Graph& g, const Pattern& F) {
    if (g.order() < F.order())
        throw std::invalid_argument("is_weakly_saturated: host smaller than pattern");
    return closure(g, F).graph.is_complete();
}

// Replays a certificate without any embedding search.
inline VerifyResult verify_certificate(const Certificate& cert, bool expect_complete = false) {
    VerifyResult res;
    Graph g(cert.n);
    std::optional<Pattern> F;
    try {
        F.emplace(from_graph6(cert.pattern_g6));
    } catch (const std::exception& e) {
        res.reason = std::string("bad pattern: ") + e.what();
        return res;
    }
    try {
        for (auto [u, v] : cert.initial) {
            if (g.has_edge(u, v)) throw std::invalid_argument("duplicate initial edge");
            g.add_edge(u, v);
        }
    } catch (const std::exception& e) {
        res.reason = std::string("bad initial edges: ") + e.what();
        return res;
    }
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& st = cert.steps[i];
        auto [u, v] = st.edge;
        auto fail = [&](const std::string& r) {
            res.failed_step = int(i);
            res.reason = r;
            return res;
        };
        if (u < 0 || v < 0 || u >= cert.n || v >= cert.n || u == v)
            return fail("step edge endpoints invalid");
        if (g.has_edge(u, v)) return fail("step edge already present");
        g.add_edge(u, v);
        std::string why;
        if (!embedding_valid(*F, g, st.map, make_edge(u, v), &why)) return fail(why);
    }
    res.final_complete = g.is_complete();
    if (expect_complete && !res.final_complete) {
        res.reason = "final graph is not complete";
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace wsat
