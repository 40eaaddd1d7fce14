#pragma once

// Combinatorial drawings: which pairs of edges cross, and the per-piece
// weights f_D(H) = cr(H) + cr(H, G - E(H)) / 2 that feed rotation certificates.

#include "prefixcert/cyclic_core.hpp"
#include "prefixcert/graph.hpp"
#include "prefixcert/structures.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prefixcert {

using Crossing = std::pair<Edge, Edge>;

/// A drawing known only through its crossing pairs. The surface is an opaque
/// label; nothing here depends on it. Crossings are stored as given so that
/// validate_drawing can report malformed input.
struct AbstractDrawing {
    Graph graph;
    std::vector<Crossing> crossings;
    std::string surface = "plane";
};

struct Violation {
    std::string rule;  // "unknown-edge", "self", "adjacent" or "multiplicity"
    Crossing pair;
    std::string message;
};

/// Empty iff every crossing joins two distinct, non-adjacent edges of the
/// graph and no pair is listed twice.
std::vector<Violation> validate_drawing(const AbstractDrawing& drawing);

/// Crossing pairs with both edges in `edges`.
using EdgeList = std::vector<Edge>;

int cr_total(const AbstractDrawing& drawing);
int cr_within(const AbstractDrawing& drawing, const EdgeList& edges);
/// Pairs with one edge in a and the other in b. Throws InputError if a and b share an edge.
int cr_between(const AbstractDrawing& drawing, const EdgeList& a, const EdgeList& b);

/// W_i = 2 f_D(H_i); the sum is always 2 cr_total.
struct DoubledWeightList {
    std::vector<std::int64_t> weights;

    std::int64_t sum() const;
    CyclicList halved() const;
};

DoubledWeightList decomposition_weights(const AbstractDrawing& drawing, const EdgeDecomposition& decomposition);

/// Vertices on a circle in the given order, edges as chords: two
/// non-adjacent edges cross iff their endpoints interleave.
AbstractDrawing convex_drawing(const Graph& g, const std::vector<Vertex>& order);
std::vector<Vertex> natural_order(const Graph& g);

/// find_rotation on W_i/2 against h + eps (below) or h - eps (above).
/// Below with h = 0 decides whether the drawing is crossing-free.
std::optional<RotationCertificate> prefix_cr_certificate(const DoubledWeightList& weights, std::int64_t h,
                                                         const Rational& epsilon, Direction direction);

/// Canonical periodic decomposition of the closure, its weights, and the below certificate.
std::optional<RotationCertificate> periodic_prefix_certificate(const Tile& tile, int t,
                                                               const AbstractDrawing& drawing, std::int64_t h,
                                                               const Rational& epsilon);

enum class Parity { Even, Odd };

std::string to_string(Parity parity);

/// Edges of a cycle given as its vertex sequence. Throws InputError if the
/// sequence is not a cycle of g.
EdgeList cycle_edges(const Graph& g, const std::vector<Vertex>& cycle);

/// Parity of the crossings between two vertex-disjoint cycles. Odd means the
/// drawing cannot be realised in the plane; Even proves nothing.
Parity jordan_parity_screen(const AbstractDrawing& drawing, const std::vector<Vertex>& first,
                            const std::vector<Vertex>& second);

/// Every simple cycle of length 3..max_length, once each, starting at its
/// smallest vertex.
std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, int max_length);

}  // namespace prefixcert
