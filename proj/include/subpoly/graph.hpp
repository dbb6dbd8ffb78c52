#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subpoly/rational.hpp"

namespace subpoly {

// Undirected simple graph on vertices 0..n-1, n <= 10.
// Edges live in a single bitmask; bit index of edge {i,j}, i<j, is j(j-1)/2+i,
// which is exactly the bit order of the graph6 format.
class Graph {
  public:
    static constexpr int max_vertices = 10;

    explicit Graph(int n);

    int n() const { return n_; }
    std::uint64_t edge_mask() const { return edges_; }

    static int edge_index(int i, int j);

    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int edge_count() const;
    int degree(int v) const;
    // Bitmask over vertices adjacent to v.
    std::uint32_t neighbors(int v) const;
    bool has_isolated_vertex() const;

    // Graph with the same vertex count whose edges are set per `mask`.
    static Graph from_edge_mask(int n, std::uint64_t mask);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);
    // K_n with one edge removed (n >= 2).
    static Graph complete_minus_edge(int n);

    // Induced subgraph on the vertices selected by `vertex_mask`,
    // renumbered in increasing order of original label.
    Graph induced(std::uint32_t vertex_mask) const;

    std::string to_graph6() const;
    static Graph from_graph6(const std::string& s);

    // Named shorthands: K5, C4, P3, K4-e, K2,3. Falls back to graph6.
    static Graph parse(const std::string& token);

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::uint64_t edges_ = 0;
};

bool isomorphic(const Graph& a, const Graph& b);

// |Aut(F)| by brute force over vertex permutations; |F| <= 8.
long long automorphism_count(const Graph& f);

// t^L(F,G): number of subgraphs of G isomorphic to F. 0 when |F| > |G|.
long long count_subgraphs(const Graph& f, const Graph& g);

// t^L(F,K_m) = (|F|!/|Aut F|) * C(m,|F|).
Int count_in_complete(const Graph& f, int m);

// t(F,G) = t^L(F,G)/t^L(F,K_|G|); 0 when |F| > |G|.
Rat density(const Graph& f, const Graph& g);

// Invokes fn once per labeled graph on n vertices (2^(n(n-1)/2) graphs).
// n <= 7 guarded by capacity_error.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// Complete k-partite graph on n vertices with balanced part sizes
// (vertex v goes to part v mod k).
Graph turan_graph(int k, int n);

// Ordered pattern list; pairwise non-isomorphic, each with >= 1 edge.
// Isolated vertices are rejected unless allow_isolated is set (they are only
// legitimate in the averaging-lemma tests).
class GraphVector {
  public:
    explicit GraphVector(std::vector<Graph> patterns, bool allow_isolated = false);

    // Parses a comma separated list of shorthands/graph6 tokens. A pure-number
    // token is glued to its predecessor so complete bipartite names survive
    // list splitting ("K2,3,C4" -> K2,3 and C4).
    static GraphVector parse(const std::string& list, bool allow_isolated = false);

    int size() const { return static_cast<int>(patterns_.size()); }
    const Graph& operator[](int i) const { return patterns_[i]; }
    const std::vector<Graph>& patterns() const { return patterns_; }
    const std::vector<int>& edge_counts() const { return edge_counts_; }
    const std::vector<std::string>& names() const { return names_; }
    int max_order() const;

  private:
    std::vector<Graph> patterns_;
    std::vector<int> edge_counts_;
    std::vector<std::string> names_;
};

std::vector<long long> stat_vector_lattice(const GraphVector& fs, const Graph& g);
std::vector<Rat> stat_vector_density(const GraphVector& fs, const Graph& g);

// Per-pattern lookup table t^L(F, H) over all labeled graphs H on |F| vertices,
// indexed by edge mask. Used to evaluate statistics of many hosts via the
// subset sum t^L(F,G) = sum over |F|-subsets S of t^L(F, G[S]).
std::vector<long long> subgraph_count_table(const Graph& f);

// t^L(F, host) for a host given as adjacency bitmasks (up to 32 vertices),
// via the subset-sum identity above. table = subgraph_count_table(f).
long long count_subgraphs_in_host(const Graph& f, const std::vector<long long>& table,
                                  const std::vector<std::uint32_t>& host_adj);

}  // namespace subpoly
