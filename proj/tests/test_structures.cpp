#include "prefixcert/errors.hpp"
#include "prefixcert/structures.hpp"
#include "prefixcert/transitivity.hpp"

#include <doctest.h>

#include <set>

using namespace prefixcert;

namespace {

void check_partitions_edges(const Graph& g, const EdgeDecomposition& d) {
    std::multiset<Edge> seen;
    for (const auto& p : d.pieces) seen.insert(p.edges.begin(), p.edges.end());
    const auto all = g.edges();
    CHECK(seen.size() == all.size());
    CHECK(std::set<Edge>(seen.begin(), seen.end()) == std::set<Edge>(all.begin(), all.end()));
    CHECK(d.is_valid_for(g));
}

Tile edge_tile() {
    Graph q(2);
    q.add_edge(0, 1);
    return Tile{q, {0}, {1}};
}

}  // namespace

TEST_CASE("columns_partition") {
    auto a = columns_partition(3, 4);
    CHECK(a.count() == 4);
    for (const auto& p : a.parts) CHECK(p.size() == 3);
    auto b = columns_partition(5, 6);
    CHECK(b.count() == 6);
    for (const auto& p : b.parts) CHECK(p.size() == 5);
    Graph g = cartesian_cycles(5, 6);
    b.validate(g);
    for (const auto& p : b.parts) {
        Graph h = g.induced(VertexSet::from_members(g.vertex_count(), p));
        CHECK(h.edge_count() == 5);
        CHECK(h.is_regular());
        CHECK(h.max_degree() == 2);
    }
}

TEST_CASE("partition validation") {
    Graph g = cycle(4);
    CHECK_THROWS_AS((VertexPartition{{{0, 1}, {1, 2, 3}}}).validate(g), InputError);
    CHECK_THROWS_AS((VertexPartition{{{0, 1}, {2}}}).validate(g), InputError);
    CHECK_THROWS_AS((VertexPartition{{{0, 1, 2, 3}, {}}}).validate(g), InputError);
    CHECK_NOTHROW((VertexPartition{{{0, 1, 2, 3}}}).validate(g));
}

TEST_CASE("star_decomposition_bipartite") {
    auto a = star_decomposition_bipartite(2, 3);
    CHECK(a.count() == 2);
    for (const auto& p : a.pieces) CHECK(p.edges.size() == 3);
    check_partitions_edges(complete_bipartite(2, 3), a);
    auto b = star_decomposition_bipartite(3, 3);
    CHECK(b.count() == 3);
    check_partitions_edges(complete_bipartite(3, 3), b);
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
}

TEST_CASE("star_decomposition_complete") {
    auto a = star_decomposition_complete(13);
    CHECK(a.count() == 13);
    for (const auto& p : a.pieces) CHECK(p.edges.size() == 6);
    check_partitions_edges(complete(13), a);
    CHECK(star_decomposition_complete(5).count() == 5);
    auto c = star_decomposition_complete(3);
    for (const auto& p : c.pieces) CHECK(p.edges.size() == 1);
    check_partitions_edges(complete(3), c);
    CHECK_THROWS_AS(star_decomposition_complete(6), InputError);
}

TEST_CASE("circulant14_decomposition") {
    auto a = circulant14_decomposition(5);
    CHECK(a.count() == 20);
    for (const auto& p : a.pieces) {
        CHECK(p.edges.size() == 2);
        CHECK(p.vertices.size() == 3);
    }
    check_partitions_edges(circulant(20, {1, 4}), a);
    CHECK(circulant14_decomposition(4).count() == 16);
    check_partitions_edges(circulant(16, {1, 4}), circulant14_decomposition(4));
    CHECK_THROWS_AS(circulant14_decomposition(2), InputError);
}

TEST_CASE("decomposition validation catches overlaps and strays") {
    Graph g = path(3);
    EdgeDecomposition twice{{Piece{{0, 1}, {{0, 1}}}, Piece{{0, 1, 2}, {{0, 1}, {1, 2}}}}};
    CHECK_FALSE(twice.is_valid_for(g));
    EdgeDecomposition undeclared{{Piece{{0}, {{0, 1}}}, Piece{{1, 2}, {{1, 2}}}}};
    CHECK_FALSE(undeclared.is_valid_for(g));
    EdgeDecomposition missing{{Piece{{0, 1}, {{0, 1}}}}};
    CHECK_FALSE(missing.is_valid_for(g));
}

TEST_CASE("tile operations") {
    Tile q = edge_tile();
    CHECK(tile_close(q, 4) == cycle(8));
    CHECK(tile_power(q, 3).graph == path(6));

    Graph two(2);
    two.add_edge(0, 1);
    Tile wide{two, {0, 1}, {0, 1}};
    CHECK_THROWS_AS(tile_concat(q, wide), InputError);

    Graph single(1);
    Tile loop_tile{single, {0}, {0}};
    CHECK_THROWS_AS(tile_close(loop_tile, 2), InputError);
    CHECK_THROWS_AS(tile_close(q, 1), InputError);
}

TEST_CASE("canonical_periodic_decomposition") {
    Tile q = edge_tile();
    auto d = canonical_periodic_decomposition(q, 4);
    CHECK(d.count() == 4);
    for (const auto& p : d.pieces) CHECK(p.edges.size() == 2);
    Graph g = tile_close(q, 4);
    check_partitions_edges(g, d);
    CHECK(is_transitive_decomposition(g, d));
}

TEST_CASE("canonical periodic decompositions are transitive") {
    // A triangle tile with a repeated boundary vertex, and a 4-cycle tile of width 2.
    Graph tri = cycle(3);
    Tile t1{tri, {0, 0}, {1, 2}};
    Graph sq = cycle(4);
    Tile t2{sq, {0, 1}, {3, 2}};
    for (const Tile& q : {t1, t2})
        for (int t = 2; t <= 5; ++t) {
            Graph g;
            try {
                g = tile_close(q, t);
            } catch (const InputError&) {
                continue;
            }
            auto d = canonical_periodic_decomposition(q, t);
            check_partitions_edges(g, d);
            CHECK(is_transitive_decomposition(g, d));
            CHECK(is_transitive_partition(g, periodic_partition(q, t)));
            CHECK(verify_cyclic_symmetry(g, periodic_partition(q, t), periodic_shift_symmetry(q, t)));
        }
}

TEST_CASE("cyclic symmetry checks") {
    Graph g = cartesian_cycles(4, 3);
    auto cols = columns_partition(4, 3);
    CHECK(check_cyclic_symmetry(g, cols, column_shift_symmetry(4, 3)) == SymmetryStatus::Ok);

    CyclicSymmetry identity{{}};
    for (int v = 0; v < g.vertex_count(); ++v) identity.sigma.push_back(v);
    CHECK(check_cyclic_symmetry(g, cols, identity) == SymmetryStatus::NotShift);

    // Swapping two vertices of one column keeps the shift only if it is an
    // automorphism; u_{0,0} and u_{1,1} are not interchangeable.
    CyclicSymmetry swapped = column_shift_symmetry(4, 3);
    std::swap(swapped.sigma[torus_id(3, 0, 0)], swapped.sigma[torus_id(3, 1, 0)]);
    CHECK(check_cyclic_symmetry(g, cols, swapped) == SymmetryStatus::NotAutomorphism);

    CyclicSymmetry broken{{0, 0, 1}};
    CHECK(check_cyclic_symmetry(cycle(3), VertexPartition{{{0}, {1}, {2}}}, broken) == SymmetryStatus::NotPermutation);
}
