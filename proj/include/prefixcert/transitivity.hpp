#pragma once

// Transitivity of cyclically ordered partitions and decompositions.
//
// A window of length L starting at i is the union of parts (pieces)
// i, i+1, ..., i+L-1 taken cyclically. A structure with t members is
// transitive when, for every L in 1..t, all t windows of length L are
// isomorphic. Vertex windows are compared as induced subgraphs; edge windows
// as graphs on the union of the pieces' declared vertex sets.

#include "prefixcert/errors.hpp"
#include "prefixcert/graph.hpp"
#include "prefixcert/isomorphism.hpp"
#include "prefixcert/structures.hpp"

#include <optional>

namespace prefixcert {

/// Window graph of a decomposition: declared vertices and edges of pieces
/// start..start+length-1, relabelled in ascending id order.
Graph decomposition_window(const Graph& g, const EdgeDecomposition& d, int start, int length);

/// Induced subgraph on parts start..start+length-1.
Graph partition_window(const Graph& g, const VertexPartition& p, int start, int length);

/// Throws InputError if d is not a valid decomposition of g.
bool is_transitive_decomposition(const Graph& g, const EdgeDecomposition& d, const IsomorphismOptions& options = {});

/// Throws InputError if p is not a partition of g. A single part is vacuously transitive.
bool is_transitive_partition(const Graph& g, const VertexPartition& p, const IsomorphismOptions& options = {});

/// Exhaustive search for a transitive partition into t parts, up to rotation
/// and reflection of the cyclic order. Throws BudgetExceeded when `budget`
/// runs out.
std::optional<VertexPartition> find_transitive_partition(const Graph& g, int t, Budget& budget,
                                                         const IsomorphismOptions& options = {});

}  // namespace prefixcert
