#include "prefixcert/errors.hpp"
#include "prefixcert/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace prefixcert;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

// Count unordered pairs {i, i+a mod n} directly.
int circulant_edges_by_pairs(int n, const std::vector<int>& strides) {
    std::set<std::pair<int, int>> pairs;
    for (int a : strides)
        for (int i = 0; i < n; ++i) pairs.insert(std::minmax(i, (i + a) % n));
    return static_cast<int>(pairs.size());
}

}  // namespace

TEST_CASE("VertexSet basics") {
    VertexSet s(70, {0, 5, 69});
    CHECK(s.size() == 3);
    CHECK(s.contains(69));
    s.erase(5);
    CHECK(s.members() == std::vector<Vertex>{0, 69});
    VertexSet t(70, {69, 1});
    CHECK((s & t).members() == std::vector<Vertex>{69});
    CHECK((s | t).size() == 3);
    CHECK((s - t).members() == std::vector<Vertex>{0});
    CHECK(s.intersects(t));
    CHECK(VertexSet(70, {69}).is_subset_of(s));
    CHECK_THROWS_AS(s.insert(70), InputError);
    CHECK(VertexSet::from_mask64(8, 0b1010).members() == std::vector<Vertex>{1, 3});
}

TEST_CASE("graph construction rejects loops and repeats") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_isolated_vertex());
}

TEST_CASE("basic generators") {
    CHECK(cycle(3).edge_count() == 3);
    CHECK(complete(5).edge_count() == 10);
    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(sorted_degrees(k23) == std::vector<int>{3, 3, 2, 2, 2});
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(1) == 3);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), InputError);
}

TEST_CASE("cartesian_cycles") {
    Graph a = cartesian_cycles(3, 3);
    CHECK(a.vertex_count() == 9);
    CHECK(a.edge_count() == 18);
    CHECK(a.is_regular());
    CHECK(a.max_degree() == 4);

    Graph b = cartesian_cycles(5, 4);
    CHECK(b.vertex_count() == 20);
    CHECK(b.edge_count() == 40);
    CHECK(b.has_edge(torus_id(4, 0, 3), torus_id(4, 0, 0)));
    CHECK(b.has_edge(torus_id(4, 4, 2), torus_id(4, 0, 2)));

    Graph c = cartesian_cycles(4, 3);
    for (int v = 0; v < c.vertex_count(); ++v) CHECK(c.degree(v) == 4);
    CHECK_THROWS_AS(cartesian_cycles(2, 5), InputError);
}

TEST_CASE("circulant") {
    CHECK(circulant_edges_by_pairs(8, {1, 4}) == 12);
    Graph a = circulant(8, {1, 4});
    CHECK(a.vertex_count() == 8);
    CHECK(a.edge_count() == 12);
    CHECK(circulant(12, {1, 4}).edge_count() == 24);
    CHECK(circulant(5, {1, 2}) == complete(5));
    CHECK_THROWS_AS(circulant(8, {5}), InputError);
    CHECK_THROWS_AS(circulant(8, {0}), InputError);
    CHECK_THROWS_AS(circulant(8, {}), InputError);
    for (int k = 3; k <= 8; ++k) CHECK(circulant(4 * k, {1, 4}).edge_count() == 8 * k);
}

TEST_CASE("induced subgraph relabels in id order") {
    Graph g = cycle(6);
    Graph h = g.induced(VertexSet(6, {0, 1, 2, 4}));
    CHECK(h.vertex_count() == 4);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}
