#include "prefixcert/structures.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>
#include <map>

namespace prefixcert {

namespace {

Piece make_piece(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    return Piece{std::move(vertices), std::move(edges)};
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

void Tile::validate() const {
    if (left.size() != right.size())
        throw InputError("tile boundary widths differ: " + std::to_string(left.size()) + " vs " +
                         std::to_string(right.size()));
    for (auto seq : {&left, &right})
        for (Vertex v : *seq)
            if (v < 0 || v >= graph.vertex_count())
                throw InputError("tile boundary vertex " + std::to_string(v) + " out of range");
}

void VertexPartition::validate(const Graph& g) const {
    if (parts.empty()) throw InputError("partition has no parts");
    std::vector<int> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw InputError("partition part " + std::to_string(i) + " is empty");
        for (Vertex v : parts[i]) {
            if (v < 0 || v >= g.vertex_count()) throw InputError("partition vertex " + std::to_string(v) + " out of range");
            if (seen[v]++) throw InputError("vertex " + std::to_string(v) + " appears in more than one part");
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " is in no part");
}

std::vector<int> VertexPartition::part_index(int vertex_count) const {
    std::vector<int> index(vertex_count, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            if (v >= 0 && v < vertex_count) index[v] = static_cast<int>(i);
    return index;
}

void EdgeDecomposition::validate(const Graph& g) const {
    if (pieces.empty()) throw InputError("decomposition has no pieces");
    std::map<Edge, int> owner;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& piece = pieces[i];
        for (Vertex v : piece.vertices)
            if (v < 0 || v >= g.vertex_count())
                throw InputError("piece " + std::to_string(i) + " vertex " + std::to_string(v) + " out of range");
        for (const auto& e : piece.edges) {
            if (e.u < 0 || e.v >= g.vertex_count() || e.u == e.v || !g.has_edge(e.u, e.v))
                throw InputError("piece " + std::to_string(i) + " edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + " is not an edge of the graph");
            if (!std::binary_search(piece.vertices.begin(), piece.vertices.end(), e.u) ||
                !std::binary_search(piece.vertices.begin(), piece.vertices.end(), e.v))
                throw InputError("piece " + std::to_string(i) + " edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + " leaves the piece's vertex set");
            auto [it, inserted] = owner.emplace(e, static_cast<int>(i));
            if (!inserted)
                throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lies in pieces " +
                                 std::to_string(it->second) + " and " + std::to_string(i));
        }
    }
    if (static_cast<int>(owner.size()) != g.edge_count())
        throw InputError("decomposition covers " + std::to_string(owner.size()) + " of " +
                         std::to_string(g.edge_count()) + " edges");
}

bool EdgeDecomposition::is_valid_for(const Graph& g) const {
    try {
        validate(g);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

std::vector<int> EdgeDecomposition::edge_owner(const Graph& g) const {
    std::map<Edge, int> owner;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const auto& e : pieces[i].edges) owner[e] = static_cast<int>(i);
    std::vector<int> out;
    for (const auto& e : g.edges()) {
        auto it = owner.find(e);
        out.push_back(it == owner.end() ? -1 : it->second);
    }
    return out;
}

std::string to_string(SymmetryStatus status) {
    switch (status) {
        case SymmetryStatus::Ok: return "ok";
        case SymmetryStatus::NotPermutation: return "not-a-permutation";
        case SymmetryStatus::NotAutomorphism: return "not-an-automorphism";
        case SymmetryStatus::NotShift: return "not-a-shift";
    }
    return "unknown";
}

VertexPartition columns_partition(int m, int n) {
    if (m < 3 || n < 3) throw InputError("C_m x C_n needs m, n >= 3");
    VertexPartition p;
    for (int j = 0; j < n; ++j) {
        std::vector<Vertex> column;
        for (int i = 0; i < m; ++i) column.push_back(torus_id(n, i, j));
        p.parts.push_back(std::move(column));
    }
    return p;
}

EdgeDecomposition star_decomposition_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InputError("complete bipartite graph needs m, n >= 1");
    EdgeDecomposition d;
    for (int i = 0; i < m; ++i) {
        std::vector<Vertex> vertices{i};
        std::vector<Edge> edges;
        for (int j = 0; j < n; ++j) {
            vertices.push_back(m + j);
            edges.emplace_back(i, m + j);
        }
        d.pieces.push_back(make_piece(std::move(vertices), std::move(edges)));
    }
    return d;
}

EdgeDecomposition star_decomposition_complete(int n) {
    if (n < 3 || n % 2 == 0)
        throw InputError("star decomposition of K_n needs odd n >= 3 (even n covers the diameters twice)");
    const int half = (n - 1) / 2;
    EdgeDecomposition d;
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> vertices{i};
        std::vector<Edge> edges;
        for (int j = 1; j <= half; ++j) {
            vertices.push_back(mod(i + j, n));
            edges.emplace_back(i, mod(i + j, n));
        }
        d.pieces.push_back(make_piece(std::move(vertices), std::move(edges)));
    }
    return d;
}

EdgeDecomposition circulant14_decomposition(int k) {
    if (k < 3) throw InputError("C(4k;{1,4}) decomposition needs k >= 3");
    const int n = 4 * k;
    EdgeDecomposition d;
    for (int i = 0; i < n; ++i)
        d.pieces.push_back(make_piece({i, mod(i + 1, n), mod(i + 4, n)},
                                      {Edge(i, mod(i + 1, n)), Edge(i, mod(i + 4, n))}));
    return d;
}

Tile tile_concat(const Tile& first, const Tile& second) {
    first.validate();
    second.validate();
    if (first.width() != second.width())
        throw InputError("tile widths differ: " + std::to_string(first.width()) + " vs " +
                         std::to_string(second.width()));
    const int offset = first.graph.vertex_count();
    Graph joined(offset + second.graph.vertex_count());
    for (const auto& e : first.graph.edges()) joined.add_edge(e.u, e.v);
    for (const auto& e : second.graph.edges()) joined.add_edge(e.u + offset, e.v + offset);
    for (int j = 0; j < first.width(); ++j) {
        Vertex a = first.right[j];
        Vertex b = second.left[j] + offset;
        if (joined.has_edge(a, b))
            throw InputError("joining boundary position " + std::to_string(j) +
                             " would create a parallel edge (simple graphs only)");
        joined.add_edge(a, b);
    }
    std::vector<Vertex> right;
    for (Vertex v : second.right) right.push_back(v + offset);
    return Tile{std::move(joined), first.left, std::move(right)};
}

Tile tile_power(const Tile& tile, int t) {
    if (t < 1) throw InputError("tile power needs t >= 1");
    tile.validate();
    Tile result = tile;
    for (int i = 1; i < t; ++i) result = tile_concat(result, tile);
    return result;
}

Graph tile_close(const Tile& tile, int t) {
    if (t < 2) throw InputError("periodic closure needs t >= 2");
    Tile power = tile_power(tile, t);
    Graph g = power.graph;
    for (int j = 0; j < power.width(); ++j) {
        Vertex a = power.left[j];
        Vertex b = power.right[j];
        if (a == b) throw InputError("closing boundary position " + std::to_string(j) + " would create a loop");
        if (g.has_edge(a, b))
            throw InputError("closing boundary position " + std::to_string(j) +
                             " would create a parallel edge (simple graphs only)");
        g.add_edge(a, b);
    }
    return g;
}

EdgeDecomposition canonical_periodic_decomposition(const Tile& tile, int t) {
    Graph closed = tile_close(tile, t);
    const int size = tile.graph.vertex_count();
    EdgeDecomposition d;
    for (int c = 0; c < t; ++c) {
        const int here = c * size;
        const int next = ((c + 1) % t) * size;
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;
        for (Vertex v = 0; v < size; ++v) vertices.push_back(here + v);
        for (const auto& e : tile.graph.edges()) edges.emplace_back(e.u + here, e.v + here);
        for (int j = 0; j < tile.width(); ++j) {
            vertices.push_back(next + tile.left[j]);
            edges.emplace_back(here + tile.right[j], next + tile.left[j]);
        }
        d.pieces.push_back(make_piece(std::move(vertices), std::move(edges)));
    }
    d.validate(closed);
    return d;
}

VertexPartition periodic_partition(const Tile& tile, int t) {
    if (t < 2) throw InputError("periodic closure needs t >= 2");
    const int size = tile.graph.vertex_count();
    VertexPartition p;
    for (int c = 0; c < t; ++c) {
        std::vector<Vertex> part;
        for (Vertex v = 0; v < size; ++v) part.push_back(c * size + v);
        p.parts.push_back(std::move(part));
    }
    return p;
}

CyclicSymmetry periodic_shift_symmetry(const Tile& tile, int t) {
    const int size = tile.graph.vertex_count();
    CyclicSymmetry s;
    for (int v = 0; v < size * t; ++v) s.sigma.push_back((v + size) % (size * t));
    return s;
}

CyclicSymmetry column_shift_symmetry(int m, int n) {
    if (m < 3 || n < 3) throw InputError("C_m x C_n needs m, n >= 3");
    CyclicSymmetry s;
    s.sigma.resize(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) s.sigma[torus_id(n, i, j)] = torus_id(n, i, (j + 1) % n);
    return s;
}

SymmetryStatus check_cyclic_symmetry(const Graph& g, const VertexPartition& partition, const CyclicSymmetry& symmetry) {
    const int n = g.vertex_count();
    const auto& sigma = symmetry.sigma;
    if (static_cast<int>(sigma.size()) != n) return SymmetryStatus::NotPermutation;
    std::vector<char> hit(n, 0);
    for (Vertex v : sigma) {
        if (v < 0 || v >= n || hit[v]) return SymmetryStatus::NotPermutation;
        hit[v] = 1;
    }
    for (const auto& e : g.edges())
        if (!g.has_edge(sigma[e.u], sigma[e.v])) return SymmetryStatus::NotAutomorphism;
    partition.validate(g);
    const int t = partition.count();
    auto index = partition.part_index(n);
    for (int i = 0; i < t; ++i) {
        const auto& part = partition.parts[i];
        const auto& next = partition.parts[(i + 1) % t];
        if (part.size() != next.size()) return SymmetryStatus::NotShift;
        for (Vertex v : part)
            if (index[sigma[v]] != (i + 1) % t) return SymmetryStatus::NotShift;
    }
    return SymmetryStatus::Ok;
}

}  // namespace prefixcert
