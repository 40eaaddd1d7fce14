#include "prefixcert/crossing.hpp"
#include "prefixcert/errors.hpp"
#include "prefixcert/structures.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace prefixcert;

namespace {

// Interleaving on a circle, computed from raw positions.
int oracle_convex_crossings(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<int> pos(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    const auto edges = g.edges();
    int count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (e.adjacent_to(f)) continue;
            int a = std::min(pos[e.u], pos[e.v]), b = std::max(pos[e.u], pos[e.v]);
            auto inside = [&](Vertex x) { return a < pos[x] && pos[x] < b; };
            if (inside(f.u) != inside(f.v)) ++count;
        }
    return count;
}

Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    return g;
}

}  // namespace

TEST_CASE("validate_drawing") {
    Graph k4 = complete(4);
    CHECK(validate_drawing(AbstractDrawing{k4, {}}).empty());

    auto adj = validate_drawing(AbstractDrawing{k4, {{Edge(0, 1), Edge(1, 2)}}});
    REQUIRE(adj.size() == 1);
    CHECK(adj[0].rule == "adjacent");

    auto dup = validate_drawing(AbstractDrawing{k4, {{Edge(0, 2), Edge(1, 3)}, {Edge(1, 3), Edge(0, 2)}}});
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].rule == "multiplicity");

    auto self = validate_drawing(AbstractDrawing{k4, {{Edge(0, 2), Edge(0, 2)}}});
    REQUIRE(self.size() == 1);
    CHECK(self[0].rule == "self");

    auto unknown = validate_drawing(AbstractDrawing{cycle(4), {{Edge(0, 2), Edge(1, 3)}}});
    REQUIRE_FALSE(unknown.empty());
    CHECK(unknown[0].rule == "unknown-edge");
}

TEST_CASE("crossing counts") {
    Graph k4 = complete(4);
    AbstractDrawing d{k4, {{Edge(0, 2), Edge(1, 3)}}};
    CHECK(cr_total(d) == 1);
    CHECK(cr_between(d, {Edge(0, 2)}, {Edge(1, 3)}) == 1);
    CHECK(cr_between(d, {Edge(0, 2)}, {Edge(0, 1)}) == 0);
    CHECK(cr_within(d, {Edge(0, 2), Edge(1, 3)}) == 1);
    CHECK_THROWS_AS(cr_between(d, {Edge(0, 2)}, {Edge(0, 2), Edge(1, 3)}), InputError);
    CHECK(cr_total(convex_drawing(k4, natural_order(k4))) == 1);
}

TEST_CASE("convex drawings") {
    CHECK(cr_total(convex_drawing(cycle(9), natural_order(cycle(9)))) == 0);
    Graph c8 = circulant(8, {1, 4});
    CHECK(oracle_convex_crossings(c8, natural_order(c8)) == 6);
    auto d = convex_drawing(c8, natural_order(c8));
    CHECK(cr_total(d) == 6);
    CHECK(validate_drawing(d).empty());

    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = circulant(10, {1, 2, 3});
        std::vector<Vertex> order = natural_order(g);
        std::shuffle(order.begin(), order.end(), rng);
        auto cd = convex_drawing(g, order);
        CHECK(cr_total(cd) == oracle_convex_crossings(g, order));
        CHECK(validate_drawing(cd).empty());
    }
}

TEST_CASE("decomposition weights") {
    Graph p = path(4);  // edges 01, 12, 23
    EdgeDecomposition halves{{Piece{{0, 1}, {{0, 1}}}, Piece{{1, 2, 3}, {{1, 2}, {2, 3}}}}};
    AbstractDrawing between{p, {{Edge(0, 1), Edge(2, 3)}}};
    CHECK(decomposition_weights(between, halves).weights == std::vector<std::int64_t>{1, 1});

    Graph k4 = complete(4);
    EdgeDecomposition one_piece_first{{Piece{{0, 1, 2, 3}, {{0, 2}, {1, 3}}},
                                       Piece{{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}}};
    AbstractDrawing inside{k4, {{Edge(0, 2), Edge(1, 3)}}};
    auto w = decomposition_weights(inside, one_piece_first);
    CHECK(w.weights == std::vector<std::int64_t>{2, 0});
    auto halves_list = w.halved();
    CHECK(std::vector<Rational>(halves_list.values().begin(), halves_list.values().end()) ==
          std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("prefix_cr_certificate examples") {
    auto a = prefix_cr_certificate(DoubledWeightList{{0, 0, 0}}, 0, Rational(1, 2), Direction::StrictlyBelow);
    REQUIRE(a);
    CHECK(a->k == 1);
    CHECK(prefix_cr_certificate(DoubledWeightList{{1, 1}}, 1, Rational(1, 2), Direction::StrictlyBelow));
    CHECK_FALSE(prefix_cr_certificate(DoubledWeightList{{2, 0}}, 0, Rational(1, 2), Direction::StrictlyBelow));
}

TEST_CASE("periodic_prefix_certificate") {
    Graph q(2);
    q.add_edge(0, 1);
    Tile tile{q, {0}, {1}};
    Graph c8 = tile_close(tile, 4);
    AbstractDrawing empty{c8, {}};
    CHECK(periodic_prefix_certificate(tile, 4, empty, 0, Rational(1, 2)));
    // Copy 0's internal edge 0-1 crosses copy 1's internal edge 2-3.
    AbstractDrawing one{c8, {{Edge(0, 1), Edge(2, 3)}}};
    REQUIRE(validate_drawing(one).empty());
    auto weights = decomposition_weights(one, canonical_periodic_decomposition(tile, 4));
    CHECK(weights.weights == std::vector<std::int64_t>{1, 1, 0, 0});
    CHECK(periodic_prefix_certificate(tile, 4, one, 1, Rational(1, 2)));
    CHECK_FALSE(periodic_prefix_certificate(tile, 4, one, 0, Rational(1, 2)));
}

TEST_CASE("jordan parity") {
    Graph g = complete(6);
    auto d = convex_drawing(g, natural_order(g));
    CHECK(cr_between(d, cycle_edges(g, {0, 2, 4}), cycle_edges(g, {1, 3, 5})) == 6);
    CHECK(jordan_parity_screen(d, {0, 2, 4}, {1, 3, 5}) == Parity::Even);

    Graph t = two_triangles();
    CHECK(jordan_parity_screen(AbstractDrawing{t, {}}, {0, 1, 2}, {3, 4, 5}) == Parity::Even);
    AbstractDrawing one{t, {{Edge(0, 1), Edge(3, 4)}}};
    CHECK(jordan_parity_screen(one, {0, 1, 2}, {3, 4, 5}) == Parity::Odd);

    CHECK_THROWS_AS(jordan_parity_screen(d, {0, 1, 2}, {2, 3, 4}), InputError);
    CHECK_THROWS_AS(cycle_edges(t, {0, 1, 3}), InputError);
}

TEST_CASE("simple cycles") {
    CHECK(simple_cycles(complete(4), 4).size() == 7);  // 4 triangles + 3 squares
    CHECK(simple_cycles(cycle(6), 6).size() == 1);
    CHECK(simple_cycles(cycle(6), 5).empty());
    CHECK(simple_cycles(complete_bipartite(3, 3), 6).size() == 9 + 6);
}

TEST_CASE("weight sum and additivity on random drawings") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = circulant(12, {1, 3, 5});
        auto edges = g.edges();
        std::vector<Crossing> crossings;
        std::bernoulli_distribution coin(0.1);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (!edges[i].adjacent_to(edges[j]) && coin(rng)) crossings.emplace_back(edges[i], edges[j]);
        AbstractDrawing d{g, crossings};
        REQUIRE(validate_drawing(d).empty());

        std::uniform_int_distribution<int> pick(0, 3);
        std::vector<EdgeList> sides(4);
        for (const auto& e : edges) sides[pick(rng)].push_back(e);
        EdgeDecomposition dec;
        for (const auto& side : sides) {
            std::set<Vertex> vs;
            for (const auto& e : side) {
                vs.insert(e.u);
                vs.insert(e.v);
            }
            if (side.empty()) vs.insert(0);
            dec.pieces.push_back(Piece{{vs.begin(), vs.end()}, side});
        }
        auto w = decomposition_weights(d, dec);
        CHECK(w.sum() == 2 * cr_total(d));

        EdgeList ab = sides[0];
        ab.insert(ab.end(), sides[1].begin(), sides[1].end());
        std::sort(ab.begin(), ab.end());
        CHECK(cr_within(d, ab) == cr_within(d, sides[0]) + cr_within(d, sides[1]) + cr_between(d, sides[0], sides[1]));
        EdgeList bc = sides[1];
        bc.insert(bc.end(), sides[2].begin(), sides[2].end());
        CHECK(cr_between(d, sides[0], bc) == cr_between(d, sides[0], sides[1]) + cr_between(d, sides[0], sides[2]));

        // Certificate existence tracks cr_total <= h, in every rotation of the list.
        const std::int64_t cr = cr_total(d);
        for (std::int64_t h : {cr - 1, cr, cr + 1}) {
            auto base = prefix_cr_certificate(w, h, Rational(1, 2), Direction::StrictlyBelow);
            CHECK(base.has_value() == (cr <= h));
            DoubledWeightList rotated = w;
            std::rotate(rotated.weights.begin(), rotated.weights.begin() + 1, rotated.weights.end());
            CHECK(prefix_cr_certificate(rotated, h, Rational(1, 2), Direction::StrictlyBelow).has_value() ==
                  base.has_value());
        }
    }
}
