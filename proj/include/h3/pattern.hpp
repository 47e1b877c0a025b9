#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <string>
#include <vector>

#include "h3/error.hpp"
#include "h3/hypergraph.hpp"
#include "h3/indexing.hpp"

namespace h3 {

inline constexpr int kMaxPatternVertices = 16;
inline constexpr int kMaxAutVertices = 10;

// A small pattern hypergraph with its classification cached at construction.
// For the connector test the uniformity fixes ell = 3: an edge e is a
// connector if some vertex v outside e lies in 3 edges that each meet e in
// exactly one vertex.
class Pattern {
public:
    static Pattern build(int k, std::vector<Triple> edges)
    {
        require(k >= 0 && k <= kMaxPatternVertices, Err::PATTERN_TOO_LARGE,
                "pattern has " + std::to_string(k) + " vertices, limit is " +
                    std::to_string(kMaxPatternVertices));
        Pattern h;
        h.g_ = Hypergraph3::build(k, std::move(edges));
        h.compute_stats();
        return h;
    }

    static Pattern from_hypergraph(const Hypergraph3& g)
    {
        return build(g.n(), g.edges());
    }

    static Pattern load(const std::string& path)
    {
        return from_hypergraph(Hypergraph3::load(path));
    }

    static Pattern read_h3(std::istream& is) { return from_hypergraph(Hypergraph3::read_h3(is)); }

    int k() const { return g_.n(); }
    std::uint64_t m() const { return g_.m(); }
    const std::vector<Triple>& edges() const { return g_.edges(); }
    const Hypergraph3& hypergraph() const { return g_; }

    bool is_linear() const { return linear_; }

    // Edges that admit an outside vertex joined by 3 once-intersecting edges.
    // Defined for linear patterns only.
    const std::vector<Triple>& connector_edges() const
    {
        require(linear_, Err::NOT_LINEAR, "connector test requires a linear pattern");
        return connectors_;
    }

    bool connector_free() const { return connector_edges().empty(); }

    int degeneracy() const { return d_H_; }      // d_H = max over subhypergraphs of min degree
    int big_D() const { return D_H_; }           // D_H = min(3 d_H, Δ)
    int max_degree() const { return max_degree_; }

    int degree(int v) const { return g_.degree(v); }

    std::uint64_t automorphism_count() const
    {
        require(k() <= kMaxAutVertices, Err::PATTERN_TOO_LARGE,
                "automorphism count limited to " + std::to_string(kMaxAutVertices) + " vertices");
        return aut_count_;
    }

private:
    void compute_stats()
    {
        const auto& edges = g_.edges();
        int k = g_.n();

        linear_ = true;
        for (std::size_t i = 0; i < edges.size() && linear_; ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (shared_vertices(edges[i], edges[j]) > 1) {
                    linear_ = false;
                    break;
                }

        max_degree_ = 0;
        for (int v = 0; v < k; ++v)
            max_degree_ = std::max(max_degree_, g_.degree(v));

        if (linear_)
            find_connectors();

        d_H_ = peel_degeneracy();
        D_H_ = std::min(3 * d_H_, max_degree_);

        if (k <= kMaxAutVertices)
            aut_count_ = brute_automorphisms();
    }

    static int shared_vertices(const Triple& a, const Triple& b)
    {
        int c = 0;
        for (int x : a)
            for (int y : b)
                if (x == y)
                    ++c;
        return c;
    }

    static bool contains(const Triple& t, int v) { return t[0] == v || t[1] == v || t[2] == v; }

    void find_connectors()
    {
        connectors_.clear();
        const auto& edges = g_.edges();
        for (const Triple& e : edges) {
            bool is_conn = false;
            for (int v = 0; v < g_.n() && !is_conn; ++v) {
                if (contains(e, v))
                    continue;
                int once = 0;
                for (const Triple& f : edges)
                    if (contains(f, v) && shared_vertices(e, f) == 1)
                        ++once;
                if (once >= 3)
                    is_conn = true;
            }
            if (is_conn)
                connectors_.push_back(e);
        }
    }

    // Min-degree peeling; the maximum min-degree seen equals
    // max over vertex subsets of the induced min degree.
    int peel_degeneracy() const
    {
        int k = g_.n();
        const auto& edges = g_.edges();
        std::vector<bool> alive_v(k, true);
        std::vector<bool> alive_e(edges.size(), true);
        std::vector<int> deg(k, 0);
        for (const Triple& e : edges)
            for (int v : e)
                ++deg[v];
        int remaining = k;
        int best = 0;
        while (remaining > 0) {
            int u = -1;
            for (int v = 0; v < k; ++v)
                if (alive_v[v] && (u == -1 || deg[v] < deg[u]))
                    u = v;
            best = std::max(best, deg[u]);
            alive_v[u] = false;
            --remaining;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!alive_e[i] || !contains(edges[i], u))
                    continue;
                alive_e[i] = false;
                for (int v : edges[i])
                    if (alive_v[v])
                        --deg[v];
            }
        }
        return best;
    }

    std::uint64_t brute_automorphisms() const
    {
        int k = g_.n();
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        const auto& edges = g_.edges();
        std::uint64_t count = 0;
        do {
            bool ok = true;
            for (const Triple& e : edges) {
                Triple img{perm[e[0]], perm[e[1]], perm[e[2]]};
                std::sort(img.begin(), img.end());
                if (!std::binary_search(edges.begin(), edges.end(), img)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        // A bijection mapping edges into the (equal-size) edge set is onto it.
        return count;
    }

    Hypergraph3 g_;
    bool linear_ = true;
    std::vector<Triple> connectors_;
    int d_H_ = 0;
    int D_H_ = 0;
    int max_degree_ = 0;
    std::uint64_t aut_count_ = 0;
};

inline bool is_linear(const Pattern& h) { return h.is_linear(); }
inline std::vector<Triple> connector_edges(const Pattern& h) { return h.connector_edges(); }
inline int degeneracy_dH(const Pattern& h) { return h.degeneracy(); }
inline int big_DH(const Pattern& h) { return h.big_D(); }
inline std::uint64_t automorphism_count(const Pattern& h) { return h.automorphism_count(); }

} // namespace h3
