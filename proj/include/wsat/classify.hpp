#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/constructions.hpp"
#include "wsat/enumerate.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

namespace wsat {

enum class GoodStatus { good, not_good, unknown };

inline const char* to_string(GoodStatus s) {
    switch (s) {
        case GoodStatus::good: return "good";
        case GoodStatus::not_good: return "not-good";
        default: return "unknown";
    }
}

struct Verdict {
    GoodStatus status = GoodStatus::unknown;
    std::string rule;
    std::string detail;
};

// Decides good / not-good / unknown by theorem dispatch, never
// extrapolating a rule beyond its hypotheses. Exact characterizations
// (caterpillar, parity) run before sufficient conditions.
inline Verdict classify_good(const Graph& t) {
    if (!t.is_tree() || t.order() < 3)
        throw std::invalid_argument("classify_good: input must be a tree on >= 3 vertices");
    long long target = t.edge_count() - 1;
    TreeFeatures tf = tree_features(t);

    auto spec = CaterpillarSpec::recognize(t);
    if (spec && spec->spine_length() >= 2 && spec->nondegenerate()) {
        int a = spec->min_pendants();
        if (a <= 2) return {GoodStatus::good, "caterpillar", spec->to_string() + ", a=" + std::to_string(a)};
        return {GoodStatus::not_good, "caterpillar",
                spec->to_string() + ", a=" + std::to_string(a) + " > 2, limit " +
                    std::to_string(t.order() - 2 + binom2(a - 1))};
    }
    if (t.order() >= 4 && tf.parity_ok) {
        if (tf.has_p2_leaf)
            return {GoodStatus::good, "parity", "leaf distances even, leaf at a degree-2 vertex"};
        return {GoodStatus::not_good, "parity", "leaf distances even, no leaf at a degree-2 vertex"};
    }
    Pattern F(t);
    WsatRecord rec = wsat_formulas(F);
    if (rec.exact) {
        if (rec.exact->value == target)
            return {GoodStatus::good, rec.exact->rule, "limit equals edge count minus one"};
        return {GoodStatus::not_good, rec.exact->rule,
                "limit " + std::to_string(rec.exact->value) + " exceeds " + std::to_string(target)};
    }
    if (find_six_vertex_structure(t) && t.order() >= 6)
        return {GoodStatus::good, "six-vertex", "adjacent degree-3 pair with private leaves"};
    if (find_even_path_structure(t))
        return {GoodStatus::good, "even-path", "even induced path with degree-2 interior"};
    if (rec.lower && rec.lower->value > target)
        return {GoodStatus::not_good, rec.lower->rule,
                "lower bound " + std::to_string(rec.lower->value) + " exceeds " +
                    std::to_string(target)};
    return {GoodStatus::unknown, "", "no theorem applies"};
}

// ---------------------------------------------------------------------------
// Reproduction experiments.

struct ReportRow {
    std::string instance;
    std::string predicted;
    std::string computed;
    bool agree = false;
    std::string note;
};

struct Report {
    std::string claim;
    std::string params;
    std::vector<ReportRow> rows;
    bool ok = false;
    std::vector<std::string> table_header;            // optional tabular payload
    std::vector<std::vector<std::string>> table;
};

struct ReproduceParams {
    std::map<std::string, std::string> kv;

    static ReproduceParams parse(const std::string& text) {
        ReproduceParams p;
        if (text.empty()) return p;
        for (const auto& tok : detail::split(text, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("params: expected key=value, got '" + tok + "'");
            p.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        return p;
    }

    int get_int(const std::string& key, int fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : detail::parse_int(it->second, key);
    }
    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    }
};

namespace detail {

inline std::string fmt_value(const ExactOutcome& out) {
    if (out.found) return std::to_string(out.value);
    return ">=" + std::to_string(out.certified_lower);
}

// exponent family: a_k = min(floor(k^(alpha/2)), floor((k-2)/2)), alpha in
// quarter steps so the root is integer-exact
struct ExponentAlpha {
    int z = 0;  // 4 * alpha
    static ExponentAlpha parse(const std::string& text) {
        double a = std::stod(text);
        int z = int(std::lround(a * 4));
        if (std::abs(a * 4 - z) > 1e-9 || z < 4 || z > 8)
            throw std::invalid_argument("alpha must be in [1,2] in steps of 0.25");
        return {z};
    }
    // largest a with a <= k^(alpha/2), i.e. a^8 <= k^z
    int floor_pow(int k) const {
        auto pow_u = [](unsigned long long b, int e) {
            unsigned __int128 r = 1;
            while (e--) r *= b;
            return r;
        };
        unsigned __int128 rhs = pow_u(k, z);
        int a = 1;
        while (pow_u(a + 1, 8) <= rhs) ++a;
        return a;
    }
    // c = p/q: is c * k^alpha <= value?  <=>  p^4 k^z <= q^4 value^4
    static bool le(long long p, long long q, int k, int z, long long value) {
        auto pow_u = [](unsigned long long b, int e) {
            unsigned __int128 r = 1;
            while (e--) r *= b;
            return r;
        };
        return pow_u(p, 4) * pow_u(k, z) <= pow_u(q, 4) * pow_u(value, 4);
    }
    // is value <= c * k^alpha?
    static bool ge(long long p, long long q, int k, int z, long long value) {
        auto pow_u = [](unsigned long long b, int e) {
            unsigned __int128 r = 1;
            while (e--) r *= b;
            return r;
        };
        return pow_u(q, 4) * pow_u(value, 4) <= pow_u(p, 4) * pow_u(k, z);
    }
};

inline int exponent_a_k(const ExponentAlpha& alpha, int k) {
    return std::min(alpha.floor_pow(k), (k - 2) / 2);
}

// Ratio windows value/k^alpha for k in [5,40], frozen after measuring the
// capped family: value stays within [c1, c2] * k^alpha.
struct ExponentWindow {
    long long p1, q1, p2, q2;  // c1 = p1/q1, c2 = p2/q2
};

inline ExponentWindow exponent_window(int z) {
    switch (z) {
        case 4: return {1, 2, 3, 2};    // alpha 1.0: [0.5, 1.5]
        case 6: return {1, 4, 1, 1};    // alpha 1.5: [0.25, 1]
        case 8: return {1, 12, 1, 6};   // alpha 2.0: [1/12, 1/6]
        default: return {1, 100, 100, 1};
    }
}

}  // namespace detail

inline Report reproduce(const std::string& claim_id, const ReproduceParams& params = {});

namespace detail {

inline Edge canonical_dropped_edge(const Pattern& T) {
    int de = *T.min_end_degree();
    for (const auto& es : T.end_stars())
        if (es.pendant_count + 1 == de)
            for (int x : T.graph().neighbors(es.center))
                if (T.is_leaf(x)) return make_edge(es.center, x);
    throw std::logic_error("canonical_dropped_edge: no end-star pendant");
}

// Evidence that a tree is good: its copy minus one edge, padded with
// isolated vertices, percolates to the complete graph.
inline bool good_evidence(const Graph& t, int n) {
    Pattern T(t);
    Edge dropped = canonical_dropped_edge(T);
    Graph start = t.padded(n);
    start.remove_edge(dropped.first, dropped.second);
    auto res = closure(start, T);
    if (!res.graph.is_complete()) return false;
    return verify_certificate(res.certificate, true).ok;
}

// Evidence consistent with not-good: every (e-1)-edge core fails at each
// tested n. No finite check covers all n; the theorem supplies that.
inline bool not_good_evidence(const Graph& t, int n_lo, int n_hi, std::string* note) {
    Pattern T(t);
    int m = t.edge_count() - 1;
    for (int n = n_lo; n <= n_hi; ++n) {
        LevelSweep ls = sweep_core_level(n, T, m);
        if (ls.any_success) {
            if (note) *note = "core percolates at n=" + std::to_string(n);
            return false;
        }
        if (note)
            *note += "n=" + std::to_string(n) + ":" + std::to_string(ls.tested) + " tested; ";
    }
    return true;
}

inline std::string tree_instance_name(const Graph& t) {
    if (auto spec = CaterpillarSpec::recognize(t)) {
        auto dg = t.degrees();
        int maxdeg = *std::max_element(dg.begin(), dg.end());
        if (maxdeg <= 2) return "path:" + std::to_string(t.order());
        if (spec->spine_length() == 1) return "star:" + std::to_string(t.order());
        return spec->to_string();
    }
    return "g6:" + canonical_form(t);
}

inline std::vector<CaterpillarSpec> nondegenerate_caterpillars(int max_v) {
    std::vector<CaterpillarSpec> out;
    std::map<std::string, bool> seen;
    for (int l = 2; l < max_v; ++l) {
        std::vector<int> a(l, 1);
        // enumerate all compositions with parts >= 1 and l + sum <= max_v
        std::function<void(int, int)> rec = [&](int idx, int budget) {
            if (idx == l) {
                CaterpillarSpec spec{a};
                std::string key = canonical_form(spec.to_graph());
                if (!seen.count(key)) {
                    seen[key] = true;
                    out.push_back(spec);
                }
                return;
            }
            for (int x = 1; x <= budget - (l - 1 - idx); ++x) {
                a[idx] = x;
                rec(idx + 1, budget - x);
            }
        };
        rec(0, max_v - l);
    }
    return out;
}

}  // namespace detail

inline Report reproduce(const std::string& claim_id, const ReproduceParams& params) {
    Report rep;
    rep.claim = claim_id;
    {
        std::string ps;
        for (auto& [k, v] : params.kv) ps += (ps.empty() ? "" : ",") + k + "=" + v;
        rep.params = ps;
    }
    auto push = [&](std::string inst, std::string pred, std::string comp, bool agree,
                    std::string note = "") {
        rep.rows.push_back({std::move(inst), std::move(pred), std::move(comp), agree,
                            std::move(note)});
    };

    if (claim_id == "goodtree-scan") {
        int max_n = params.get_int("max_n", 9);
        if (max_n < 3 || max_n > 10) throw std::invalid_argument("goodtree-scan: max_n in [3,10]");
        for (int nv = 3; nv <= max_n; ++nv) {
            for (const Graph& t : enumerate_trees(nv)) {
                TreeFeatures tf = tree_features(t);
                if (!tf.parity_ok) continue;
                Verdict v = classify_good(t);
                std::string inst = detail::tree_instance_name(t);
                if (v.status == GoodStatus::good) {
                    bool ok = detail::good_evidence(t, 2 * nv + 1);
                    push(inst, "good (" + v.rule + ")",
                         ok ? "(e-1)-edge certificate at n=" + std::to_string(2 * nv + 1)
                            : "no certificate found",
                         ok);
                } else if (v.status == GoodStatus::not_good) {
                    std::string note;
                    bool ok = detail::not_good_evidence(t, nv, nv + 3, &note);
                    push(inst, "not-good (" + v.rule + ")",
                         ok ? "all (e-1)-edge cores fail for n=v..v+3" : "counterexample found", ok,
                         note);
                } else {
                    push(inst, "decided", "unknown", false, "parity tree left undecided");
                }
            }
        }
    } else if (claim_id == "goodcat-table") {
        int max_v = params.get_int("max_v", 8);
        if (max_v < 4 || max_v > 9) throw std::invalid_argument("goodcat-table: max_v in [4,9]");
        for (const auto& spec : detail::nondegenerate_caterpillars(max_v)) {
            Pattern T(spec.to_graph());
            WsatRecord rec = wsat_formulas(T);
            long long predicted = rec.exact->value;
            LimitEstimate est = wsat_limit_estimate(T, 2);
            bool agree = est.found && est.certified && est.value == predicted;
            push(spec.to_string(), std::to_string(predicted),
                 est.found ? std::to_string(est.value) : "not found", agree,
                 std::string(est.certified ? "certified" : "uncertified") + " at n<=" +
                     std::to_string(est.n_used));
        }
    } else if (claim_id == "threecat") {
        std::vector<std::vector<int>> instances = {{1, 0, 1}, {1, 0, 2}, {2, 0, 2}};
        if (params.kv.count("spec")) {
            instances.clear();
            std::vector<int> a;
            for (const auto& tok : detail::split(params.get("spec", ""), '-'))
                a.push_back(detail::parse_int(tok, "pendant count"));
            instances.push_back(a);
        }
        for (const auto& a : instances) {
            CaterpillarSpec spec{a};
            Pattern T(spec.to_graph());
            WsatRecord rec = wsat_formulas(T);
            if (!rec.exact)
                throw std::invalid_argument("threecat: " + spec.to_string() +
                                            " has no closed-form value");
            long long predicted = rec.exact->value;
            LimitEstimate est = wsat_limit_estimate(T, 2);
            bool agree = est.found && est.certified && est.value == predicted;
            push(spec.to_string(), std::to_string(predicted),
                 est.found ? std::to_string(est.value) : "not found", agree,
                 "minimality swept at " + std::to_string(predicted - 1));
        }
    } else if (claim_id == "secondlargest") {
        int l = params.get_int("l", 3);
        if (l < 3 || l > 4) throw std::invalid_argument("secondlargest: l in [3,4]");
        int nv = 2 * l;
        long long bound = ((long long)l * l - l + 2) / 2;
        std::vector<std::string> achievers;
        long long best = -1;
        for (const Graph& t : enumerate_trees(nv)) {
            auto dg = t.degrees();
            if (*std::max_element(dg.begin(), dg.end()) == nv - 1) continue;  // skip the star
            Pattern T(t);
            WsatRecord rec = wsat_formulas(T);
            long long value;
            std::string how;
            if (rec.exact) {
                value = rec.exact->value;
                how = rec.exact->rule;
            } else {
                LimitEstimate est = wsat_limit_estimate(T, 2);
                if (!est.found || !est.certified) {
                    push(detail::tree_instance_name(t), "<= " + std::to_string(bound),
                         "undetermined", false);
                    continue;
                }
                value = est.value;
                how = "solver";
            }
            if (value > best) best = value;
            bool agree = value <= bound;
            if (value == bound) achievers.push_back(detail::tree_instance_name(t));
            push(detail::tree_instance_name(t), "<= " + std::to_string(bound),
                 std::to_string(value), agree, how);
        }
        std::sort(achievers.begin(), achievers.end());
        std::string got;
        for (auto& s : achievers) got += (got.empty() ? "" : " ") + s;
        std::string want1 = detail::tree_instance_name(
            caterpillar_graph(std::vector<int>{l - 1, l - 1}));
        std::string want2 = detail::tree_instance_name(
            caterpillar_graph(std::vector<int>{l - 1, 0, l - 2}));
        std::vector<std::string> want{want1, want2};
        std::sort(want.begin(), want.end());
        push("maximum", std::to_string(bound), std::to_string(best), best == bound);
        push("achievers", want[0] + " " + want[1], got,
             achievers == want,
             "equality characterization");
    } else if (claim_id == "counterexample") {
        Graph t = counterexample_tree();
        Verdict v = classify_good(t);
        std::string note;
        bool nev = detail::not_good_evidence(t, 8, 8, &note);
        push("full tree", "not-good (" + v.rule + ")",
             nev ? "all 5-edge cores fail at n=8" : "5-edge witness found",
             v.status == GoodStatus::not_good && nev, note);
        std::vector<int> five{0, 1, 2, 3, 4};
        Graph sub = t.induced(five);
        Verdict vs = classify_good(sub);
        bool gev = detail::good_evidence(sub, 11);
        push("endtree on v1..v5", "good (" + vs.rule + ")",
             gev ? "3-edge certificate at n=11" : "no certificate",
             vs.status == GoodStatus::good && gev);
    } else if (claim_id == "exponents") {
        auto alpha = detail::ExponentAlpha::parse(params.get("alpha", "1.5"));
        int kmax = params.get_int("kmax", 40);
        if (kmax < 5 || kmax > 60) throw std::invalid_argument("exponents: kmax in [5,60]");
        auto win = detail::exponent_window(alpha.z);
        rep.table_header = {"alpha", "k", "a_k", "value"};
        for (int k = 5; k <= kmax; ++k) {
            int ak = detail::exponent_a_k(alpha, k);
            long long value = (k - 2) + binom2(ak - 1);
            CaterpillarSpec spec{{ak, k - ak - 2}};
            long long threshold = ak <= 2 ? 3LL * (k - 1) + 1 : 3LL * (k - 1) + 4;
            ConstructionOutput cons = caterpillar_saturator(spec, int(threshold));
            Pattern T(spec.to_graph());
            long long lower = formula_lower_all_n(T, wsat_formulas(T));
            bool certified = cons.claimed_edges == value && lower == value &&
                             verify_certificate(cons.certificate, true).ok;
            // window: c1 * k^alpha <= value <= c2 * k^alpha, integer-exact
            bool in_window = detail::ExponentAlpha::le(win.p1, win.q1, k, alpha.z, value) &&
                             detail::ExponentAlpha::ge(win.p2, win.q2, k, alpha.z, value);
            push("k=" + std::to_string(k), std::to_string(value),
                 certified ? std::to_string(cons.claimed_edges) : "uncertified",
                 certified && in_window,
                 "a_k=" + std::to_string(ak) + (in_window ? "" : ", outside ratio window"));
            rep.table.push_back({params.get("alpha", "1.5"), std::to_string(k),
                                 std::to_string(ak), std::to_string(value)});
        }
    } else if (claim_id == "monotonicity") {
        std::vector<std::string> pats = {"path:3", "path:4", "star:4", "clique:3", "cat:2,1"};
        for (const auto& ps : pats) {
            Pattern F(parse_graph_spec(ps));
            std::vector<long long> vals;
            std::string seq;
            bool all_found = true;
            for (int n = F.order(); n <= F.order() + 4; ++n) {
                ExactOutcome out = wsat_exact(n, F);
                if (!out.found) all_found = false;
                vals.push_back(out.found ? out.value : -1);
                seq += (seq.empty() ? "" : ",") + detail::fmt_value(out);
            }
            bool mono = all_found;
            for (size_t i = 0; i + 1 < vals.size(); ++i)
                if (vals[i + 1] > vals[i]) mono = false;
            push(ps, "non-increasing", seq, mono,
                 F.min_degree() >= 2 ? "pattern minimum degree >= 2: hypothesis not met" : "");
        }
    } else if (claim_id == "clique-formula") {
        struct Case {
            int k, n;
        };
        std::vector<Case> cases = {{3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}};
        for (auto [k, n] : cases) {
            Pattern F(complete_graph(k));
            long long predicted = wsat_clique(n, k);
            ExactOutcome out = wsat_exact(n, F);
            push("K_" + std::to_string(k) + " at n=" + std::to_string(n),
                 std::to_string(predicted), detail::fmt_value(out),
                 out.found && out.value == predicted,
                 "minimality " + std::to_string(out.minimality_tested) + " classes");
        }
    } else {
        throw std::invalid_argument("reproduce: unknown claim '" + claim_id + "'");
    }

    rep.ok = true;
    for (const auto& r : rep.rows)
        if (!r.agree) rep.ok = false;
    return rep;
}

}  // namespace wsat
