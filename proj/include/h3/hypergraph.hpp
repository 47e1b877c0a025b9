#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "h3/bitset.hpp"
#include "h3/error.hpp"
#include "h3/indexing.hpp"

namespace h3 {

class Hypergraph3;

// Bipartite view: rows are all C(n,2) vertex pairs, columns are vertices,
// entry (S, v) set iff S together with v is an edge. Stored sparse by row.
struct BipartiteIncidence {
    int rows = 0; // C(n, 2)
    int cols = 0; // n
    std::vector<std::vector<int>> row_support;
    std::uint64_t nnz = 0;

    std::uint64_t edge_count_between(const PairSet& X, const VertexSet& Y) const;
};

// Immutable 3-uniform hypergraph with pair-indexed neighborhood bitsets.
// Vertices are 0..n-1; edges are sorted distinct triples.
class Hypergraph3 {
public:
    static Hypergraph3 build(int n, std::vector<Triple> edges)
    {
        require(n >= 0, Err::OUT_OF_RANGE, "negative vertex count");
        Hypergraph3 g;
        g.n_ = n;
        for (auto& t : edges)
            t = normalize_triple(t, n, "edge");
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.edges_ = std::move(edges);

        std::uint64_t np = pair_count(n);
        g.pair_nbhd_.assign(np, VertexSet(n));
        g.degree_.assign(n, 0);
        for (const Triple& e : g.edges_) {
            g.pair_nbhd_[pair_index(e[0], e[1])].set(e[2]);
            g.pair_nbhd_[pair_index(e[0], e[2])].set(e[1]);
            g.pair_nbhd_[pair_index(e[1], e[2])].set(e[0]);
            ++g.degree_[e[0]];
            ++g.degree_[e[1]];
            ++g.degree_[e[2]];
        }
        g.pair_size_.resize(np);
        for (std::uint64_t s = 0; s < np; ++s)
            g.pair_size_[s] = g.pair_nbhd_[s].count();
        return g;
    }

    int n() const { return n_; }
    std::uint64_t m() const { return edges_.size(); }
    int num_pairs() const { return static_cast<int>(pair_count(n_)); }

    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(int a, int b, int c) const
    {
        Triple t = normalize_triple({a, b, c}, n_, "query");
        return pair_nbhd_[pair_index(t[0], t[1])].test(t[2]);
    }

    // N_G(S) as a bitset over vertices.
    const VertexSet& pair_nbhd(int pair_idx) const
    {
        check_pair(pair_idx);
        return pair_nbhd_[pair_idx];
    }

    int pair_degree(int pair_idx) const
    {
        check_pair(pair_idx);
        return pair_size_[pair_idx];
    }

    int degree(int v) const
    {
        if (v < 0 || v >= n_)
            fail(Err::OUT_OF_RANGE, "vertex out of range");
        return degree_[v];
    }

    double density() const
    {
        std::uint64_t total = binom3(static_cast<std::uint64_t>(n_));
        return total == 0 ? 0.0 : static_cast<double>(m()) / static_cast<double>(total);
    }

    // N_G(S; Y) = N_G(S) ∩ Y
    VertexSet neighborhood(int pair_idx, const VertexSet& Y) const
    {
        check_pair(pair_idx);
        check_vset(Y);
        return pair_nbhd_[pair_idx] & Y;
    }

    // N_G(S1, S2; Y) = N_G(S1) ∩ N_G(S2) ∩ Y
    VertexSet co_neighborhood(int p1, int p2, const VertexSet& Y) const
    {
        check_pair(p1);
        check_pair(p2);
        check_vset(Y);
        return pair_nbhd_[p1] & pair_nbhd_[p2] & Y;
    }

    // e_G(X, Y): (S, v) incidences with S in X, v in Y, S ∪ {v} an edge.
    std::uint64_t incidence_count(const PairSet& X, const VertexSet& Y) const
    {
        check_pset(X);
        check_vset(Y);
        std::uint64_t total = 0;
        X.for_each([&](int s) { total += and_count(pair_nbhd_[s], Y); });
        return total;
    }

    // d_q(A, B) = e_G(A, B) / (q |A| |B|)
    double q_density(const PairSet& A, const VertexSet& B, double q) const
    {
        require(q > 0.0, Err::NONPOSITIVE_Q, "q must be positive");
        std::uint64_t a = A.count();
        std::uint64_t b = B.count();
        require(a > 0 && b > 0, Err::EMPTY_SIDE, "q_density over an empty side");
        return static_cast<double>(incidence_count(A, B)) /
               (q * static_cast<double>(a) * static_cast<double>(b));
    }

    BipartiteIncidence to_bipartite() const
    {
        BipartiteIncidence bi;
        bi.rows = num_pairs();
        bi.cols = n_;
        bi.row_support.resize(bi.rows);
        for (int s = 0; s < bi.rows; ++s) {
            bi.row_support[s] = pair_nbhd_[s].elements();
            bi.nnz += bi.row_support[s].size();
        }
        return bi;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }
    PairSet all_pairs() const { return PairSet::full(num_pairs()); }

    void write_h3(std::ostream& os) const
    {
        os << n_ << ' ' << m() << '\n';
        for (const Triple& e : edges_)
            os << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    }

    static Hypergraph3 read_h3(std::istream& is)
    {
        std::string line;
        long long n = -1, m = -1;
        std::vector<Triple> edges;
        bool header_seen = false;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            std::istringstream ls(line);
            if (!header_seen) {
                require(static_cast<bool>(ls >> n >> m), Err::IO_ERROR,
                        "bad .h3 header at line " + std::to_string(lineno));
                require(n >= 0 && m >= 0, Err::IO_ERROR, "negative n or m in .h3 header");
                header_seen = true;
                edges.reserve(static_cast<std::size_t>(m));
                continue;
            }
            long long a, b, c;
            require(static_cast<bool>(ls >> a >> b >> c), Err::IO_ERROR,
                    "bad .h3 edge at line " + std::to_string(lineno));
            edges.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
        }
        require(header_seen, Err::IO_ERROR, "empty .h3 input");
        require(static_cast<long long>(edges.size()) == m, Err::IO_ERROR,
                ".h3 edge count mismatch: header says " + std::to_string(m) + ", found " +
                    std::to_string(edges.size()));
        return build(static_cast<int>(n), std::move(edges));
    }

    void save(const std::string& path) const
    {
        std::ofstream f(path, std::ios::binary);
        require(static_cast<bool>(f), Err::IO_ERROR, "cannot open for writing: " + path);
        write_h3(f);
        require(static_cast<bool>(f), Err::IO_ERROR, "write failed: " + path);
    }

    static Hypergraph3 load(const std::string& path)
    {
        std::ifstream f(path, std::ios::binary);
        require(static_cast<bool>(f), Err::IO_ERROR, "cannot open: " + path);
        return read_h3(f);
    }

private:
    void check_pair(int idx) const
    {
        if (idx < 0 || idx >= num_pairs())
            fail_pair(idx);
    }

    [[gnu::noinline]] void fail_pair(int idx) const
    {
        fail(Err::OUT_OF_RANGE, "pair index " + std::to_string(idx) + " out of range");
    }

    void check_vset(const VertexSet& Y) const
    {
        require(Y.universe() == n_, Err::OUT_OF_RANGE, "vertex set universe mismatch");
    }

    void check_pset(const PairSet& X) const
    {
        require(X.universe() == num_pairs(), Err::OUT_OF_RANGE, "pair set universe mismatch");
    }

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<VertexSet> pair_nbhd_;
    std::vector<int> pair_size_;
    std::vector<int> degree_;
};

inline std::uint64_t BipartiteIncidence::edge_count_between(const PairSet& X,
                                                            const VertexSet& Y) const
{
    std::uint64_t total = 0;
    X.for_each([&](int s) {
        for (int v : row_support[s])
            if (Y.test(v))
                ++total;
    });
    return total;
}

} // namespace h3
