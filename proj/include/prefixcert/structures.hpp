#pragma once

// Tiles, partitions, decompositions and the cyclic symmetries that relate
// their parts.

#include "prefixcert/graph.hpp"

#include <string>
#include <vector>

namespace prefixcert {

/// Graph with left and right boundary sequences of equal width.
/// Boundary entries may repeat.
struct Tile {
    Graph graph;
    std::vector<Vertex> left;
    std::vector<Vertex> right;

    int width() const { return static_cast<int>(left.size()); }
    void validate() const;
};

/// Cyclically ordered list of disjoint nonempty vertex sets covering V.
struct VertexPartition {
    std::vector<std::vector<Vertex>> parts;

    int count() const { return static_cast<int>(parts.size()); }
    /// Throws InputError unless the parts partition V(g).
    void validate(const Graph& g) const;
    /// part_of[v] = index of the part containing v.
    std::vector<int> part_index(int vertex_count) const;
};

struct Piece {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted
};

/// Cyclically ordered list of edge-disjoint subgraphs whose edges cover E.
struct EdgeDecomposition {
    std::vector<Piece> pieces;

    int count() const { return static_cast<int>(pieces.size()); }
    /// Throws InputError unless every edge of g lies in exactly one piece and
    /// every piece edge joins two of the piece's declared vertices.
    void validate(const Graph& g) const;
    bool is_valid_for(const Graph& g) const;
    /// owner[e] = piece index for each edge of g.edges(), in that order.
    std::vector<int> edge_owner(const Graph& g) const;
};

/// Vertex permutation meant to be an automorphism sending part i onto part i+1.
struct CyclicSymmetry {
    std::vector<Vertex> sigma;
};

enum class SymmetryStatus { Ok, NotPermutation, NotAutomorphism, NotShift };

std::string to_string(SymmetryStatus status);

/// V_j = column j of C_m x C_n, j = 0..n-1.
VertexPartition columns_partition(int m, int n);

/// H_i = star at u_i of K_{m,n}: vertices {u_i} + W.
EdgeDecomposition star_decomposition_bipartite(int m, int n);

/// H_i = vertices v_i..v_{i+(n-1)/2}, edges v_i v_{i+j} for 1 <= j <= (n-1)/2. n odd.
EdgeDecomposition star_decomposition_complete(int n);

/// H_i = {v_i v_{i+1}, v_i v_{i+4}} for C(4k; {1,4}), k >= 3.
EdgeDecomposition circulant14_decomposition(int k);

/// Q1 Q2: disjoint union (Q2 relabelled after Q1) plus edges R1[j] - L2[j].
Tile tile_concat(const Tile& first, const Tile& second);
Tile tile_power(const Tile& tile, int t);
/// Closure of Q^t: adds L[j] - R_t[j]. Copy c (0-based) occupies ids
/// c*|Q| .. (c+1)*|Q|-1.
Graph tile_close(const Tile& tile, int t);

/// G_i^+ = i-th copy of the tile graph plus the external edges to copy i+1.
EdgeDecomposition canonical_periodic_decomposition(const Tile& tile, int t);
/// V_i = vertex set of the i-th copy.
VertexPartition periodic_partition(const Tile& tile, int t);
/// Sends each copy onto the next.
CyclicSymmetry periodic_shift_symmetry(const Tile& tile, int t);

/// sigma(u_{i,j}) = u_{i,j+1 mod n}.
CyclicSymmetry column_shift_symmetry(int m, int n);

SymmetryStatus check_cyclic_symmetry(const Graph& g, const VertexPartition& partition, const CyclicSymmetry& symmetry);
inline bool verify_cyclic_symmetry(const Graph& g, const VertexPartition& partition, const CyclicSymmetry& symmetry) {
    return check_cyclic_symmetry(g, partition, symmetry) == SymmetryStatus::Ok;
}

}  // namespace prefixcert
