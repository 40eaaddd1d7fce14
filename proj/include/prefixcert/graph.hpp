#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace prefixcert {

using Vertex = int;

/// Subset of {0..universe-1} with bit-vector storage.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    static VertexSet from_members(int universe, const std::vector<Vertex>& members);
    static VertexSet full(int universe);

    int universe() const { return universe_; }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v);
    void erase(Vertex v);
    int size() const;
    bool empty() const;
    std::vector<Vertex> members() const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t mask64() const { return words_.empty() ? 0 : words_[0]; }
    static VertexSet from_mask64(int universe, std::uint64_t mask);

private:
    void check(Vertex v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected edge with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool touches(Vertex w) const { return u == w || v == w; }
    bool adjacent_to(const Edge& other) const { return touches(other.u) || touches(other.v); }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    /// Throws InputError on loops, repeated edges, or ids out of range.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }
    VertexSet closed_neighbor_set(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const { return n_ == 0 || max_degree() == min_degree(); }
    bool has_isolated_vertex() const { return n_ > 0 && min_degree() == 0; }

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in ascending id order.
    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexSet> rows_;
};

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
/// Sides U = {0..m-1} and W = {m..m+n-1}.
Graph complete_bipartite(int m, int n);
/// C_m x C_n; vertex u_{i,j} (row i, column j) has id i*n + j.
Graph cartesian_cycles(int m, int n);
/// Circulant C(n; strides), strides in 1..floor(n/2), distinct.
Graph circulant(int n, const std::vector<int>& strides);

inline Vertex torus_id(int n, int row, int column) { return row * n + column; }

}  // namespace prefixcert
