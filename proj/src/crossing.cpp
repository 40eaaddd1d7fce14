#include "prefixcert/crossing.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace prefixcert {

namespace {

std::string describe(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Crossing ordered(const Crossing& c) { return c.first < c.second ? c : Crossing{c.second, c.first}; }

bool in_sorted(const EdgeList& sorted, const Edge& e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

EdgeList sorted_copy(EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

std::vector<Violation> validate_drawing(const AbstractDrawing& drawing) {
    std::vector<Violation> out;
    std::set<Crossing> seen;
    const Graph& g = drawing.graph;
    auto known = [&](const Edge& e) {
        return e.u >= 0 && e.v < g.vertex_count() && e.u != e.v && g.has_edge(e.u, e.v);
    };
    for (const auto& raw : drawing.crossings) {
        const Crossing c = ordered(raw);
        const std::string label = describe(c.first) + " x " + describe(c.second);
        if (!known(c.first) || !known(c.second)) {
            out.push_back({"unknown-edge", c, label + ": not an edge of the graph"});
            continue;
        }
        if (c.first == c.second) {
            out.push_back({"self", c, label + ": an edge cannot cross itself"});
            continue;
        }
        if (c.first.adjacent_to(c.second)) out.push_back({"adjacent", c, label + ": adjacent edges cross"});
        if (!seen.insert(c).second) out.push_back({"multiplicity", c, label + ": pair crosses more than once"});
    }
    return out;
}

int cr_total(const AbstractDrawing& drawing) { return static_cast<int>(drawing.crossings.size()); }

int cr_within(const AbstractDrawing& drawing, const EdgeList& edges) {
    const EdgeList sorted = sorted_copy(edges);
    int count = 0;
    for (const auto& c : drawing.crossings)
        if (in_sorted(sorted, c.first) && in_sorted(sorted, c.second)) ++count;
    return count;
}

int cr_between(const AbstractDrawing& drawing, const EdgeList& a, const EdgeList& b) {
    const EdgeList sa = sorted_copy(a);
    const EdgeList sb = sorted_copy(b);
    for (const auto& e : sa)
        if (in_sorted(sb, e)) throw InputError("edge " + describe(e) + " lies on both sides of cr_between");
    int count = 0;
    for (const auto& c : drawing.crossings) {
        if ((in_sorted(sa, c.first) && in_sorted(sb, c.second)) || (in_sorted(sb, c.first) && in_sorted(sa, c.second)))
            ++count;
    }
    return count;
}

std::int64_t DoubledWeightList::sum() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

CyclicList DoubledWeightList::halved() const {
    std::vector<Rational> values;
    for (auto w : weights) values.emplace_back(w, 2);
    return CyclicList(std::move(values));
}

DoubledWeightList decomposition_weights(const AbstractDrawing& drawing, const EdgeDecomposition& decomposition) {
    decomposition.validate(drawing.graph);
    const auto edges = drawing.graph.edges();
    const auto owner = decomposition.edge_owner(drawing.graph);
    auto owner_of = [&](const Edge& e) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) throw InputError("crossing uses unknown edge " + describe(e));
        return owner[it - edges.begin()];
    };
    DoubledWeightList list;
    list.weights.assign(decomposition.count(), 0);
    // A crossing inside H_i adds 2 to W_i; one between H_i and H_j adds 1 to each.
    for (const auto& c : drawing.crossings) {
        ++list.weights[owner_of(c.first)];
        ++list.weights[owner_of(c.second)];
    }
    return list;
}

AbstractDrawing convex_drawing(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw InputError("convex order must list every vertex once");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        if (v < 0 || v >= n || position[v] >= 0) throw InputError("convex order is not a permutation");
        position[v] = i;
    }
    AbstractDrawing drawing{g, {}, "plane"};
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int a = position[edges[i].u], b = position[edges[i].v];
        if (a > b) std::swap(a, b);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].adjacent_to(edges[j])) continue;
            const int c = position[edges[j].u], d = position[edges[j].v];
            const bool c_inside = a < c && c < b;
            const bool d_inside = a < d && d < b;
            if (c_inside != d_inside) drawing.crossings.emplace_back(edges[i], edges[j]);
        }
    }
    return drawing;
}

std::vector<Vertex> natural_order(const Graph& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::optional<RotationCertificate> prefix_cr_certificate(const DoubledWeightList& weights, std::int64_t h,
                                                         const Rational& epsilon, Direction direction) {
    BoundSpec{Rational(h), epsilon}.validate();
    const Rational bound = direction == Direction::StrictlyBelow ? Rational(h) + epsilon : Rational(h) - epsilon;
    return find_rotation(weights.halved(), bound, direction);
}

std::optional<RotationCertificate> periodic_prefix_certificate(const Tile& tile, int t,
                                                               const AbstractDrawing& drawing, std::int64_t h,
                                                               const Rational& epsilon) {
    Graph closed = tile_close(tile, t);
    if (!(closed == drawing.graph)) throw InputError("drawing is not a drawing of the periodic closure");
    auto decomposition = canonical_periodic_decomposition(tile, t);
    return prefix_cr_certificate(decomposition_weights(drawing, decomposition), h, epsilon, Direction::StrictlyBelow);
}

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

EdgeList cycle_edges(const Graph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) throw InputError("a cycle needs at least 3 vertices");
    std::vector<Vertex> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("cycle repeats a vertex");
    EdgeList edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() || !g.has_edge(a, b))
            throw InputError("cycle step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        edges.emplace_back(a, b);
    }
    return edges;
}

Parity jordan_parity_screen(const AbstractDrawing& drawing, const std::vector<Vertex>& first,
                            const std::vector<Vertex>& second) {
    const EdgeList a = cycle_edges(drawing.graph, first);
    const EdgeList b = cycle_edges(drawing.graph, second);
    for (Vertex v : first)
        if (std::find(second.begin(), second.end(), v) != second.end())
            throw InputError("cycles share vertex " + std::to_string(v));
    return cr_between(drawing, a, b) % 2 == 0 ? Parity::Even : Parity::Odd;
}

namespace {

void extend_cycles(const Graph& g, int max_length, std::vector<Vertex>& walk, std::vector<char>& on_walk,
                   std::vector<std::vector<Vertex>>& out) {
    const Vertex start = walk.front();
    const Vertex last = walk.back();
    for (Vertex next : g.neighbors(last)) {
        if (next == start && walk.size() >= 3 && walk[1] < walk.back()) out.push_back(walk);
        if (next <= start || on_walk[next] || static_cast<int>(walk.size()) == max_length) continue;
        walk.push_back(next);
        on_walk[next] = 1;
        extend_cycles(g, max_length, walk, on_walk, out);
        on_walk[next] = 0;
        walk.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, int max_length) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> on_walk(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> walk{s};
        on_walk[s] = 1;
        extend_cycles(g, max_length, walk, on_walk, out);
        on_walk[s] = 0;
    }
    return out;
}

}  // namespace prefixcert
