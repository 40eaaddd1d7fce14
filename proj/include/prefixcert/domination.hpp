#pragma once

// Domination predicates, exact solvers, and searches that restrict the
// candidate set to one rotation of a transitive partition.

#include "prefixcert/cyclic_core.hpp"
#include "prefixcert/errors.hpp"
#include "prefixcert/graph.hpp"
#include "prefixcert/structures.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prefixcert {

enum class Variant { Dominating, TotalDominating, PairedDominating };

std::string to_string(Variant variant);
Variant parse_variant(const std::string& name);

// --- predicates ------------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& d);
/// Throws InputError if g has an isolated vertex.
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool induced_perfect_matching_exists(const Graph& g, const VertexSet& s);
bool is_paired_dominating(const Graph& g, const VertexSet& s);
bool satisfies(const Graph& g, const VertexSet& s, Variant variant);

/// Open private neighbourhood {w : N(w) & S = {v}}. Throws InputError if v is not in S.
VertexSet pn(const Graph& g, const VertexSet& s, Vertex v);
VertexSet epn(const Graph& g, const VertexSet& s, Vertex v);
VertexSet ipn(const Graph& g, const VertexSet& s, Vertex v);

/// Private-neighbour criterion: every v in S has ipn or epn nonempty.
/// Throws InputError if S is not a TD-set.
bool is_minimal_total_dominating(const Graph& g, const VertexSet& s);
/// Definitional: no D - {v} dominates. Throws InputError if D does not dominate.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

/// |N[u] & S| - 1; -1 when u is undominated.
int rd_vertex(const Graph& g, const VertexSet& s, Vertex u);
int rd_graph(const Graph& g, const VertexSet& s);
int rd_of(const Graph& g, const VertexSet& s, const std::vector<Vertex>& part);

/// Smallest even integer >= |V| / max degree. Throws InputError on isolated vertices.
int paired_lower_bound(const Graph& g);

/// ceil(4n/3), plus one when n = 2 (mod 3).
int h_pair(int n);

// --- bit-mask kernels for graphs with at most 64 vertices -------------------

namespace masks {

struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> open;    // N(v)
    std::vector<std::uint64_t> closed;  // N[v]

    explicit MaskGraph(const Graph& g);
    MaskGraph(int vertex_count, std::vector<std::uint64_t> open_neighborhoods);
    std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

std::uint64_t dominated_by(const MaskGraph& g, std::uint64_t s);
std::uint64_t totally_dominated_by(const MaskGraph& g, std::uint64_t s);
bool is_dominating(const MaskGraph& g, std::uint64_t s);
bool is_total_dominating(const MaskGraph& g, std::uint64_t s);
bool has_perfect_matching(const MaskGraph& g, std::uint64_t s);
bool is_paired_dominating(const MaskGraph& g, std::uint64_t s);
/// ipn/epn criterion for a TD-set s.
bool private_neighbor_criterion(const MaskGraph& g, std::uint64_t s);
/// Closed private-neighbour criterion for a dominating set s.
bool closed_private_neighbor_criterion(const MaskGraph& g, std::uint64_t s);

}  // namespace masks

// --- solvers ----------------------------------------------------------------

struct SolveReport {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_by_prefix = 0;
};

/// Transitive partition plus a verified shift symmetry. With it, searches may
/// assume the rotation that satisfies the prefix bound starts at part 0.
struct RotationContext {
    VertexPartition partition;
    CyclicSymmetry symmetry;

    /// Throws InputError unless the symmetry is an automorphism shifting each part to the next.
    void verify(const Graph& g) const;
};

/// Exact minimum size (gamma, gamma_t, gamma_p). Candidate sizes ascend;
/// each size is searched by branching on the lowest-id vertex that is not yet
/// (totally) dominated. The witness is the lexicographically smallest optimum
/// among those the search admits: all optima without a rotation context, the
/// rotation-normalised optima with one. Throws BudgetExceeded, or InputError
/// for graphs above 64 vertices.
SolveReport min_parameter(const Graph& g, Variant variant, Budget& budget,
                          const RotationContext* rotation = nullptr);

/// Exact maximum size of a minimal dominating (Gamma) or minimal total
/// dominating (Gamma_t) set.
SolveReport max_minimal_parameter(const Graph& g, Variant variant, Budget& budget,
                                  const RotationContext* rotation = nullptr);

enum class Extremum { Minimum, Maximum };

struct PrefixSearchResult {
    std::optional<VertexSet> witness;
    std::vector<int> part_counts;  // f_S(V_i) of the witness
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_by_prefix = 0;
};

/// Depth-first over parts in cyclic order, choosing S & V_i part by part and
/// keeping every prefix sum of f_S(V_i) strictly below (or above) j*bound/t.
/// Below: S must satisfy `variant`. Above: S must be a minimal dominating or
/// minimal TD-set. The rotation is fixed at part 0; the verified symmetry
/// makes a negative answer cover every rotation.
PrefixSearchResult prefix_bounded_search(const Graph& g, const RotationContext& rotation, Variant variant,
                                         const Rational& bound, Direction direction, Budget& budget);

/// Below-direction search against h + epsilon.
PrefixSearchResult prefix_pruned_search(const Graph& g, const RotationContext& rotation, Variant variant, int h,
                                        const Rational& epsilon, Budget& budget);

/// For Minimum: found(h + eps, below) and not found(h - eps, below), which
/// holds exactly when the minimum equals h. For Maximum (minimal sets):
/// found(h - eps, above) and not found(h + eps, above).
bool decide_parameter_via_corollary(const Graph& g, const RotationContext& rotation, Variant variant, int h,
                                    const Rational& epsilon, Budget& budget,
                                    Extremum extremum = Extremum::Minimum);

/// (k+1)h - |V| for a k-regular graph.
int rd_target(const Graph& g, int h);

/// Dominating sets whose prefix sums of rd_S(V_i) stay below j*bound/t.
PrefixSearchResult rd_bounded_search(const Graph& g, const RotationContext& rotation, const Rational& bound,
                                     Budget& budget);

/// Search against rd_target(h) + epsilon. Throws InputError if g is not regular.
PrefixSearchResult rd_prefix_pruned_search(const Graph& g, const RotationContext& rotation, int h,
                                           const Rational& epsilon, Budget& budget);

/// found(t + eps) and not found(t - eps) with t = rd_target(h); equals [gamma == h].
bool decide_domination_via_rd(const Graph& g, const RotationContext& rotation, int h, const Rational& epsilon,
                              Budget& budget);

struct TorusCheck {
    int n = 0;
    int expected = 0;
    SolveReport report;
    bool holds() const { return report.value == expected; }
};

/// gamma_p(C_5 x C_n) against h_pair(n), solved with the column rotation context.
TorusCheck check_paired_torus(int n, Budget& budget);
/// Gamma_t(C_4 x C_n) against 2n.
TorusCheck check_upper_total_torus(int n, Budget& budget);

inline bool verify_theorem_t1(int n, Budget& budget) { return check_paired_torus(n, budget).holds(); }
inline bool verify_theorem_n4(int n, Budget& budget) { return check_upper_total_torus(n, budget).holds(); }

RotationContext torus_columns_context(int m, int n);

}  // namespace prefixcert
