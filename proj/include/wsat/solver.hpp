#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/enumerate.hpp"
#include "wsat/parallel.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

inline long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// w-sat(n, K_k) = C(k,2) - 1 + (n-k)(k-2)
inline long long wsat_clique(int n, int k) {
    if (k < 2 || n < k) throw std::invalid_argument("wsat_clique: need n >= k >= 2");
    return binom2(k) - 1 + (long long)(n - k) * (k - 2);
}

struct BoundEntry {
    long long value = 0;
    std::string rule;
    bool holds_all_n = false;              // lower bounds proved for every n >= v(F)
    std::optional<long long> threshold_n;  // upper bounds known to hold for n >= threshold
};

// Closed-form knowledge about the limit value w-sat(F). For complete
// patterns clique_k is set instead and the value depends on n.
struct WsatRecord {
    std::vector<BoundEntry> lowers, uppers, exacts;
    std::optional<BoundEntry> lower, upper, exact;  // best of each
    std::optional<int> clique_k;
};

namespace detail {

// |S| for the adjacent-pair upper bound: neighbors of u or w that are not
// adjacent to any leaf and differ from u and w. A leaf hanging on u or w
// itself lands in S (its only neighbor is not a leaf).
inline int adjacent_pair_s(const Pattern& F, int u, int w) {
    const Graph& g = F.graph();
    Bitset in_s(g.order());
    auto leaf_adjacent = [&](int v) {
        for (int x : g.neighbors(v))
            if (F.is_leaf(x)) return true;
        return false;
    };
    for (int side : {u, w})
        for (int v : g.neighbors(side)) {
            if (v == u || v == w) continue;
            if (!leaf_adjacent(v)) in_s.set(v);
        }
    return in_s.count();
}

}  // namespace detail

inline WsatRecord wsat_formulas(const Pattern& F) {
    WsatRecord rec;
    int v = F.order();
    long long e = F.edge_count();
    auto add_lower = [&](long long val, const std::string& rule, bool all_n) {
        rec.lowers.push_back({val, rule, all_n, std::nullopt});
    };
    auto add_upper = [&](long long val, const std::string& rule, std::optional<long long> thr) {
        rec.uppers.push_back({val, rule, false, thr});
    };
    auto add_exact = [&](long long val, const std::string& rule) {
        rec.exacts.push_back({val, rule, false, std::nullopt});
    };

    add_lower(e - 1, "trivial-lower", true);

    if (F.graph().is_complete()) rec.clique_k = v;

    if (F.is_tree_pattern()) {
        TreeFeatures tf = tree_features(F.graph());
        int d = tf.min_leaf_support;

        if (tf.diameter <= 2) add_exact(binom2(v - 1), "star");

        bool is_path = F.max_degree() <= 2;
        if (is_path) add_exact(v - 2, "path");

        auto spec = CaterpillarSpec::recognize(F.graph());
        if (spec && spec->spine_length() >= 2) {
            bool consecutive_ok = true;
            for (size_t i = 0; i + 1 < spec->a.size(); ++i)
                if (spec->a[i] == 0 && spec->a[i + 1] == 0) consecutive_ok = false;
            if (spec->nondegenerate()) {
                long long a = spec->min_pendants();
                add_exact(v - 2 + (a > 2 ? binom2(a - 1) : 0), "caterpillar");
            }
            if (consecutive_ok) {
                long long a = spec->min_nonzero_pendants();
                add_lower(v - 2 + binom2(a - 1), "caterpillar-lower", true);
            }
            if (spec->spine_length() == 3 && spec->a[1] == 0 && spec->a[0] > 0 && spec->a[2] > 0) {
                long long a1 = std::min(spec->a[0], spec->a[2]);
                add_exact(v - 2 + binom2(a1), "three-spine");
                add_lower(v - 2 + binom2(a1), "three-spine", true);
            }
        }

        if (tf.has_p2_leaf) add_exact(e - 1, "pendant-at-degree-two");

        if (F.min_end_degree()) {
            long long de = *F.min_end_degree();
            add_upper(e - 1 + binom2(de), "end-star-upper", 3LL * (v - 1) + de + 1);
            // adjacent-pair bound, minimized over adjacent non-pendant pairs
            std::optional<long long> best;
            for (auto [x, y] : F.edge_list()) {
                if (F.is_leaf(x) || F.is_leaf(y)) continue;
                long long s = detail::adjacent_pair_s(F, x, y);
                long long val = e - 1 + s * de;
                if (!best || val < *best) best = val;
            }
            if (best) add_upper(*best, "adjacent-pair-upper", 3LL * (v - 1) + de + 1);
        }

        // internal tree versus the leaf-adjacent set U. The lower bound
        // needs U to be a vertex cover of T: the count argument follows
        // every edge of the new copy into U's image, so an edge avoiding U
        // breaks it (the two-degree-2-middles trees are good yet fail it).
        {
            Bitset in_u(v);
            for (int x : tf.leaf_support) in_u.set(x);
            bool cover = true;
            for (auto [x, y] : F.edge_list())
                if (!in_u.test(x) && !in_u.test(y)) cover = false;
            bool equals = tf.internal_vertices.size() == tf.leaf_support.size();
            if (equals)
                for (size_t i = 0; i < tf.internal_vertices.size(); ++i)
                    if (tf.internal_vertices[i] != tf.leaf_support[i]) equals = false;
            if (cover) add_lower(v - 2 + binom2(d - 1), "leaf-cover-lower", true);
            if (equals) add_exact(v - 2 + binom2(d - 1), "internal-cover-exact");
        }

        // diameter 4 with the center not adjacent to any leaf
        if (tf.diameter == 4) {
            int center = -1;
            for (int x = 0; x < v; ++x) {
                auto dist = F.graph().bfs_distances(x);
                int ecc = *std::max_element(dist.begin(), dist.end());
                if (ecc <= 2) center = x;
            }
            if (center >= 0) {
                bool center_has_leaf = false;
                for (int y : F.graph().neighbors(center))
                    if (F.is_leaf(y)) center_has_leaf = true;
                if (!center_has_leaf) {
                    add_exact(v - 2 + binom2(d), "diameter-four");
                    add_lower(v - 2 + binom2(d), "diameter-four", true);
                }
            }
        }
    }

    for (const auto& b : rec.lowers)
        if (!rec.lower || b.value > rec.lower->value) rec.lower = b;
    for (const auto& b : rec.uppers)
        if (!rec.upper || b.value < rec.upper->value) rec.upper = b;
    for (const auto& b : rec.exacts) {
        if (rec.exact && rec.exact->value != b.value)
            throw std::logic_error("wsat_formulas: exact rules disagree (" + rec.exact->rule + "=" +
                                   std::to_string(rec.exact->value) + " vs " + b.rule + "=" +
                                   std::to_string(b.value) + ")");
        if (!rec.exact) rec.exact = b;
    }
    if (rec.exact) {
        if (!rec.lower || rec.lower->value < rec.exact->value)
            rec.lower = BoundEntry{rec.exact->value, rec.exact->rule, true, std::nullopt};
        if (!rec.upper || rec.upper->value > rec.exact->value)
            rec.upper = BoundEntry{rec.exact->value, rec.exact->rule, false, std::nullopt};
    }
    if (rec.lower && rec.upper && rec.lower->value > rec.upper->value)
        throw std::logic_error("wsat_formulas: lower exceeds upper");
    return rec;
}

// Strongest lower bound valid at every n >= v(F).
inline long long formula_lower_all_n(const Pattern& F, const WsatRecord& rec) {
    long long best = F.edge_count() - 1;
    for (const auto& b : rec.lowers)
        if (b.holds_all_n && b.value > best) best = b.value;
    return best;
}

struct ExactOutcome {
    int n = 0;
    bool found = false;
    long long value = -1;           // m* when found
    Graph witness;                  // n-vertex witness when found
    long long certified_lower = 0;  // when not found: every m < this fails
    long long search_from = 0;
    long long cap = 0;
    long long minimality_tested = 0;   // (m*-1)-edge classes tested, all failing
    long long minimality_skipped = 0;  // classes with more than n non-isolated vertices
};

namespace detail {

inline const std::vector<Graph>& cores_cached(int m) {
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, enumerate_cores(m, std::max(10, m))).first;
    return it->second;
}

// Tests every m-edge core (padded to n) for weak saturation. Returns the
// first succeeding core index in canonical order, or -1. Deterministic for
// any worker count: fixed-size chunks are evaluated in order.
inline int sweep_level(int n, const Pattern& F, int m, long long* tested, long long* skipped) {
    const auto& cores = cores_cached(m);
    const size_t chunk = 64;
    for (size_t base = 0; base < cores.size(); base += chunk) {
        size_t count = std::min(chunk, cores.size() - base);
        std::vector<int> result(count, 0);  // 0 fail, 1 success, 2 skipped
        parallel_for(count, [&](size_t i) {
            const Graph& core = cores[base + i];
            if (core.order() > n) {
                result[i] = 2;
                return;
            }
            result[i] = is_weakly_saturated(core.padded(n), F) ? 1 : 0;
        });
        for (size_t i = 0; i < count; ++i) {
            if (result[i] == 2) {
                if (skipped) ++*skipped;
                continue;
            }
            if (tested) ++*tested;
            if (result[i] == 1) return int(base + i);
        }
    }
    return -1;
}

}  // namespace detail

struct LevelSweep {
    bool any_success = false;
    int success_index = -1;
    long long tested = 0, skipped = 0;
};

// Public sweep of one edge level: tests every m-edge core (padded to n).
// Counts are complete only when no core succeeds.
inline LevelSweep sweep_core_level(int n, const Pattern& F, int m) {
    LevelSweep ls;
    ls.success_index = detail::sweep_level(n, F, m, &ls.tested, &ls.skipped);
    ls.any_success = ls.success_index >= 0;
    return ls;
}

// Exact w-sat(n, F) by exhaustive search over isomorphism classes of
// m-edge cores padded with isolated vertices, ascending m. After the first
// success the full (m*-1) level is swept to certify minimality.
inline ExactOutcome wsat_exact(int n, const Pattern& F, std::optional<long long> m_cap = {},
                               const WsatRecord* known = nullptr) {
    if (n < F.order()) throw std::invalid_argument("wsat_exact: n below pattern size");
    if (n > 64) throw std::invalid_argument("wsat_exact: host cap is 64 vertices");
    WsatRecord local;
    if (!known) {
        local = wsat_formulas(F);
        known = &local;
    }
    ExactOutcome out;
    out.n = n;
    out.search_from = std::max<long long>(0, formula_lower_all_n(F, *known));
    long long cap;
    if (m_cap)
        cap = *m_cap;
    else if (known->upper)
        cap = known->upper->value;
    else if (known->clique_k)
        cap = wsat_clique(n, *known->clique_k);
    else
        cap = F.edge_count() - 1 + binom2(F.max_degree());
    cap = std::min(cap, binom2(n));
    out.cap = cap;

    for (long long m = out.search_from; m <= cap; ++m) {
        if (m == 0) {
            if (is_weakly_saturated(Graph(n), F)) {
                out.found = true;
                out.value = 0;
                out.witness = Graph(n);
                break;
            }
            continue;
        }
        if (m > 12) throw std::invalid_argument("wsat_exact: edge budget cap (12) exceeded");
        int idx = detail::sweep_level(n, F, int(m), nullptr, nullptr);
        if (idx >= 0) {
            out.found = true;
            out.value = m;
            out.witness = detail::cores_cached(int(m))[idx].padded(n);
            break;
        }
    }
    if (!out.found) {
        out.certified_lower = std::max(out.search_from, cap + 1);
        return out;
    }
    if (out.value >= 1) {
        int prev = int(out.value) - 1;
        if (prev == 0) {
            out.minimality_tested = 1;  // the edgeless graph
            if (is_weakly_saturated(Graph(n), F))
                throw std::logic_error("wsat_exact: minimality sweep found smaller witness");
        } else {
            long long tested = 0, skipped = 0;
            int idx = detail::sweep_level(n, F, prev, &tested, &skipped);
            if (idx >= 0) throw std::logic_error("wsat_exact: minimality sweep found smaller witness");
            out.minimality_tested = tested;
            out.minimality_skipped = skipped;
        }
    }
    return out;
}

struct LimitEstimate {
    bool found = false;
    long long value = -1;
    bool stabilized = false;
    bool certified = false;       // value equals a lower bound valid at all n
    bool matches_formula = false;
    int n_used = 0;
    std::vector<std::pair<int, std::optional<long long>>> history;
};

// Runs wsat_exact for n = v(T), v(T)+1, ... until the value repeats
// `window` consecutive times or the budget is exhausted. If the value hits
// a lower bound valid at every n, monotone non-increase certifies the
// limit; both facts are reported separately.
inline LimitEstimate wsat_limit_estimate(const Pattern& T, int window, int n_budget = -1,
                                         std::optional<long long> m_cap = {}) {
    if (!T.is_tree_pattern())
        throw std::invalid_argument("wsat_limit_estimate: pattern must be a tree");
    if (window < 2) throw std::invalid_argument("wsat_limit_estimate: window must be >= 2");
    WsatRecord rec = wsat_formulas(T);
    long long lower = formula_lower_all_n(T, rec);
    if (n_budget < 0) n_budget = std::min(64, 3 * T.order() + 8);
    LimitEstimate est;
    int consecutive = 0;
    for (int n = T.order(); n <= n_budget; ++n) {
        ExactOutcome out = wsat_exact(n, T, m_cap, &rec);
        est.n_used = n;
        est.history.push_back({n, out.found ? std::optional<long long>(out.value) : std::nullopt});
        if (out.found) {
            if (est.found && out.value == est.value)
                ++consecutive;
            else
                consecutive = 1;
            est.found = true;
            est.value = out.value;
            if (out.value == lower) est.certified = true;
        } else {
            consecutive = 0;
        }
        if (consecutive >= window) {
            est.stabilized = true;
            break;
        }
    }
    est.matches_formula = est.found && rec.exact && rec.exact->value == est.value;
    return est;
}

}  // namespace wsat
