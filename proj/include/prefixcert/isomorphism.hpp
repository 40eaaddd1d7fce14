#pragma once

#include "prefixcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace prefixcert {

struct IsomorphismOptions {
    /// Backtracking nodes before BudgetExceeded is thrown.
    std::uint64_t max_nodes = 1'000'000;
};

/// Exact isomorphism test for desk-scale graphs.
///
/// Screens on vertex/edge counts and a joint colour refinement of both
/// graphs, then backtracks over colour-compatible candidates. Throws
/// BudgetExceeded rather than guessing.
bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

/// Same search, returning the mapping a -> b when one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options = {});

}  // namespace prefixcert
