#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wsat {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Fixed-size bitset backed by 64-bit words. Sized at construction; no
// implicit growth.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    void and_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void or_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void andnot_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t cur = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int bit = (wi << 6) + __builtin_ctzll(cur);
                return bit < n_ ? bit : -1;
            }
            if (++wi >= static_cast<int>(w_.size())) return -1;
            cur = w_[wi];
        }
    }

    uint64_t word(int i) const { return w_[i]; }
    uint64_t* data() { return w_.data(); }
    const uint64_t* data() const { return w_.data(); }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as one
// bitmask row per vertex, so neighborhood intersection is a handful of
// word operations. No loops, no parallel edges.
class Graph {
public:
    Graph() : Graph(0) {}

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(size_t(n) * words_, 0) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range: " + std::to_string(n));
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop rejected at vertex " + std::to_string(u));
        if (has_edge(u, v)) return;
        row(u)[v >> 6] |= uint64_t{1} << (v & 63);
        row(v)[u >> 6] |= uint64_t{1} << (u & 63);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        row(u)[v >> 6] &= ~(uint64_t{1} << (v & 63));
        row(v)[u >> 6] &= ~(uint64_t{1} << (u & 63));
        --m_;
    }

    const uint64_t* row(int v) const { return rows_.data() + size_t(v) * words_; }

    int degree(int v) const {
        const uint64_t* r = row(v);
        int d = 0;
        for (int i = 0; i < words_; ++i) d += __builtin_popcountll(r[i]);
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        const uint64_t* r = row(v);
        for (int wi = 0; wi < words_; ++wi) {
            uint64_t w = r[wi];
            while (w) {
                out.push_back((wi << 6) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
        return out;
    }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const { return 2LL * m_ == int64_t(n_) * (n_ - 1); }

    std::vector<int> bfs_distances(int src) const {
        std::vector<int> dist(n_, -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        return dist;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        auto d = bfs_distances(0);
        return std::find(d.begin(), d.end(), -1) == d.end();
    }

    bool is_tree() const { return n_ >= 1 && m_ == n_ - 1 && is_connected(); }

    // Longest shortest path; requires a connected graph.
    int diameter() const {
        if (n_ == 0) return 0;
        int best = 0;
        for (int v = 0; v < n_; ++v) {
            auto d = bfs_distances(v);
            for (int x : d) {
                if (x < 0) throw std::invalid_argument("diameter: graph is disconnected");
                best = std::max(best, x);
            }
        }
        return best;
    }

    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(int(i), int(j));
        return g;
    }

    // perm[old] = new label; perm must be a permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& perm) const {
        Graph g(n_);
        for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
        return g;
    }

    // Same graph plus isolated vertices up to n_total.
    Graph padded(int n_total) const {
        if (n_total < n_) throw std::invalid_argument("padded: target smaller than graph");
        Graph g(n_total);
        for (auto [u, v] : edges()) g.add_edge(u, v);
        return g;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    static constexpr int kMaxVertices = 4096;

private:
    uint64_t* row(int v) { return rows_.data() + size_t(v) * words_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> rows_;
    int m_ = 0;
};

// ---------------------------------------------------------------------------
// graph6 encoding (the de-facto format: 6-bit groups offset by 63, upper
// triangle in column order).

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: graph too large");
    }
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(char(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out.push_back(char((acc << (6 - bit)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid byte in input");
        return c - 63;
    };
    int n;
    int first = next_byte();
    if (first < 63) {
        n = first;
    } else {
        int a = next_byte(), b = next_byte(), c = next_byte();
        n = (a << 12) | (b << 6) | c;
    }
    Graph g(n);
    int64_t bits_needed = int64_t(n) * (n - 1) / 2;
    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                acc = next_byte();
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) g.add_edge(u, v);
            --have;
        }
    }
    // trailing padding must be zero bits and no extra bytes
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != s.size())
        throw std::invalid_argument("graph6: trailing bytes after " + std::to_string(bits_needed) +
                                    " bits");
    return g;
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Named families.

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: need at least 1 vertex");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need at least 1 vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Caterpillar: spine vertices 0..l-1 in path order, then the pendants of
// spine vertex t before those of t+1.
inline Graph caterpillar_graph(const std::vector<int>& a) {
    int l = static_cast<int>(a.size());
    if (l < 1) throw std::invalid_argument("caterpillar_graph: empty spine");
    int total = l;
    for (int x : a) {
        if (x < 0) throw std::invalid_argument("caterpillar_graph: negative pendant count");
        total += x;
    }
    Graph g(total);
    for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
    int next = l;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < a[i]; ++j) g.add_edge(i, next++);
    return g;
}

// ---------------------------------------------------------------------------
// Graph-spec mini-language:
//   g6:<graph6>  path:<l>  star:<n>  clique:<k>  cat:<a1,...,al>
//   edges:<n>;<u-v,u-v,...>

namespace detail {

inline int parse_int(const std::string& tok, const std::string& what) {
    if (tok.empty()) throw std::invalid_argument("graph spec: empty " + what);
    size_t used = 0;
    int value;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("graph spec: bad " + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw std::invalid_argument("graph spec: bad " + what + " '" + tok + "'");
    return value;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

}  // namespace detail

inline Graph parse_graph_spec(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec: expected '<kind>:<args>', got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (kind == "g6") return from_graph6(rest);
    if (kind == "path") return path_graph(detail::parse_int(rest, "path length"));
    if (kind == "star") return star_graph(detail::parse_int(rest, "star size"));
    if (kind == "clique") return complete_graph(detail::parse_int(rest, "clique size"));
    if (kind == "cat") {
        std::vector<int> a;
        for (const auto& tok : detail::split(rest, ','))
            a.push_back(detail::parse_int(tok, "pendant count"));
        return caterpillar_graph(a);
    }
    if (kind == "edges") {
        size_t semi = rest.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("graph spec: edges form needs '<n>;<u-v,...>'");
        int n = detail::parse_int(rest.substr(0, semi), "vertex count");
        Graph g(n);
        std::string list = rest.substr(semi + 1);
        if (!list.empty()) {
            for (const auto& tok : detail::split(list, ',')) {
                auto parts = detail::split(tok, '-');
                if (parts.size() != 2)
                    throw std::invalid_argument("graph spec: bad edge token '" + tok + "'");
                int u = detail::parse_int(parts[0], "endpoint");
                int v = detail::parse_int(parts[1], "endpoint");
                if (u < 0 || u >= n || v < 0 || v >= n)
                    throw std::invalid_argument("graph spec: endpoint out of range in '" + tok + "'");
                if (u == v) throw std::invalid_argument("graph spec: loop in '" + tok + "'");
                if (g.has_edge(u, v))
                    throw std::invalid_argument("graph spec: duplicate edge '" + tok + "'");
                g.add_edge(u, v);
            }
        }
        return g;
    }
    throw std::invalid_argument("graph spec: unknown kind '" + kind + "'");
}

}  // namespace wsat
