#include "prefixcert/domination.hpp"

#include <algorithm>
#include <bit>

namespace prefixcert {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }
int popcount(Mask m) { return std::popcount(m); }

// Lexicographic order of the sorted member lists, for sets of equal size.
bool lex_less(Mask a, Mask b) {
    Mask d = a ^ b;
    return d != 0 && (a & (d & (~d + 1))) != 0;
}

void require_desk_scale(const Graph& g) {
    if (g.vertex_count() > 64)
        throw InputError("exact solvers support at most 64 vertices, got " + std::to_string(g.vertex_count()));
}

void require_no_isolated(const Graph& g, const char* what) {
    if (g.has_isolated_vertex()) throw InputError(std::string(what) + " is undefined on graphs with isolated vertices");
}

void require_member(const VertexSet& s, Vertex v) {
    if (v < 0 || v >= s.universe() || !s.contains(v))
        throw InputError("vertex " + std::to_string(v) + " is not in the set");
}

}  // namespace

std::string to_string(Variant variant) {
    switch (variant) {
        case Variant::Dominating: return "dominating";
        case Variant::TotalDominating: return "total";
        case Variant::PairedDominating: return "paired";
    }
    return "unknown";
}

Variant parse_variant(const std::string& name) {
    if (name == "dominating" || name == "domination") return Variant::Dominating;
    if (name == "total" || name == "total-dominating") return Variant::TotalDominating;
    if (name == "paired" || name == "paired-dominating") return Variant::PairedDominating;
    throw InputError("unknown variant '" + name + "' (expected dominating, total or paired)");
}

// --- predicates ------------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& d) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (!d.contains(u) && !g.neighbor_set(u).intersects(d)) return false;
    return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    require_no_isolated(g, "total domination");
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (!g.neighbor_set(u).intersects(s)) return false;
    return true;
}

namespace {

bool match_rest(const Graph& g, VertexSet& remaining) {
    auto members = remaining.members();
    if (members.empty()) return true;
    const Vertex v = members.front();
    remaining.erase(v);
    for (Vertex w : g.neighbors(v)) {
        if (!remaining.contains(w)) continue;
        remaining.erase(w);
        bool ok = match_rest(g, remaining);
        remaining.insert(w);
        if (ok) {
            remaining.insert(v);
            return true;
        }
    }
    remaining.insert(v);
    return false;
}

}  // namespace

bool induced_perfect_matching_exists(const Graph& g, const VertexSet& s) {
    if (s.size() % 2 != 0) return false;
    VertexSet remaining = s;
    return match_rest(g, remaining);
}

bool is_paired_dominating(const Graph& g, const VertexSet& s) {
    return is_dominating(g, s) && induced_perfect_matching_exists(g, s);
}

bool satisfies(const Graph& g, const VertexSet& s, Variant variant) {
    switch (variant) {
        case Variant::Dominating: return is_dominating(g, s);
        case Variant::TotalDominating: return is_total_dominating(g, s);
        case Variant::PairedDominating: return is_paired_dominating(g, s);
    }
    return false;
}

VertexSet pn(const Graph& g, const VertexSet& s, Vertex v) {
    require_member(s, v);
    VertexSet out(g.vertex_count());
    for (Vertex w : g.neighbors(v)) {
        VertexSet hits = g.neighbor_set(w) & s;
        if (hits.size() == 1) out.insert(w);
    }
    return out;
}

VertexSet epn(const Graph& g, const VertexSet& s, Vertex v) { return pn(g, s, v) - s; }

VertexSet ipn(const Graph& g, const VertexSet& s, Vertex v) { return pn(g, s, v) & s; }

bool is_minimal_total_dominating(const Graph& g, const VertexSet& s) {
    if (!is_total_dominating(g, s)) throw InputError("set is not a total dominating set");
    for (Vertex v : s.members())
        if (ipn(g, s, v).empty() && epn(g, s, v).empty()) return false;
    return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
    if (!is_dominating(g, d)) throw InputError("set is not a dominating set");
    for (Vertex v : d.members()) {
        VertexSet smaller = d;
        smaller.erase(v);
        if (is_dominating(g, smaller)) return false;
    }
    return true;
}

int rd_vertex(const Graph& g, const VertexSet& s, Vertex u) { return (g.closed_neighbor_set(u) & s).size() - 1; }

int rd_of(const Graph& g, const VertexSet& s, const std::vector<Vertex>& part) {
    int sum = 0;
    for (Vertex u : part) sum += rd_vertex(g, s, u);
    return sum;
}

int rd_graph(const Graph& g, const VertexSet& s) {
    int sum = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) sum += rd_vertex(g, s, u);
    return sum;
}

int paired_lower_bound(const Graph& g) {
    require_no_isolated(g, "paired domination");
    const int n = g.vertex_count();
    const int delta = g.max_degree();
    int bound = (n + delta - 1) / delta;
    return bound % 2 == 0 ? bound : bound + 1;
}

int h_pair(int n) {
    if (n < 3) throw InputError("h_pair needs n >= 3");
    int value = (4 * n + 2) / 3;
    return n % 3 == 2 ? value + 1 : value;
}

// --- masks -----------------------------------------------------------------

namespace masks {

MaskGraph::MaskGraph(const Graph& g) : n(g.vertex_count()) {
    require_desk_scale(g);
    open.resize(n);
    closed.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        open[v] = g.neighbor_set(v).mask64();
        closed[v] = open[v] | bit(v);
    }
}

MaskGraph::MaskGraph(int vertex_count, std::vector<std::uint64_t> open_neighborhoods)
    : n(vertex_count), open(std::move(open_neighborhoods)) {
    if (n > 64 || static_cast<int>(open.size()) != n) throw InputError("malformed mask graph");
    closed.resize(n);
    for (int v = 0; v < n; ++v) closed[v] = open[v] | bit(v);
}

std::uint64_t dominated_by(const MaskGraph& g, std::uint64_t s) {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) out |= g.closed[lowest(rest)];
    return out;
}

std::uint64_t totally_dominated_by(const MaskGraph& g, std::uint64_t s) {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) out |= g.open[lowest(rest)];
    return out;
}

bool is_dominating(const MaskGraph& g, std::uint64_t s) { return dominated_by(g, s) == g.all(); }

bool is_total_dominating(const MaskGraph& g, std::uint64_t s) { return totally_dominated_by(g, s) == g.all(); }

bool has_perfect_matching(const MaskGraph& g, std::uint64_t s) {
    if (s == 0) return true;
    if (popcount(s) % 2 != 0) return false;
    const int v = lowest(s);
    const Mask rest = s & ~bit(v);
    for (Mask cand = g.open[v] & rest; cand; cand &= cand - 1)
        if (has_perfect_matching(g, rest & ~bit(lowest(cand)))) return true;
    return false;
}

bool is_paired_dominating(const MaskGraph& g, std::uint64_t s) {
    return is_dominating(g, s) && has_perfect_matching(g, s);
}

bool private_neighbor_criterion(const MaskGraph& g, std::uint64_t s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        bool has_private = false;
        for (Mask w = g.open[v]; w && !has_private; w &= w - 1)
            has_private = (g.open[lowest(w)] & s) == bit(v);
        if (!has_private) return false;
    }
    return true;
}

bool closed_private_neighbor_criterion(const MaskGraph& g, std::uint64_t s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        bool has_private = false;
        for (Mask w = g.closed[v]; w && !has_private; w &= w - 1)
            has_private = (g.closed[lowest(w)] & s) == bit(v);
        if (!has_private) return false;
    }
    return true;
}

}  // namespace masks

// --- rotation context ------------------------------------------------------

void RotationContext::verify(const Graph& g) const {
    partition.validate(g);
    auto status = check_cyclic_symmetry(g, partition, symmetry);
    if (status != SymmetryStatus::Ok)
        throw InputError("rotation context rejected: symmetry is " + to_string(status));
}

RotationContext torus_columns_context(int m, int n) {
    return RotationContext{columns_partition(m, n), column_shift_symmetry(m, n)};
}

namespace {

using masks::MaskGraph;

struct PartLayout {
    int t = 0;
    std::vector<int> part_of;
    std::vector<Mask> part_mask;

    PartLayout(const Graph& g, const RotationContext& rotation) : t(rotation.partition.count()) {
        part_of = rotation.partition.part_index(g.vertex_count());
        part_mask.assign(t, 0);
        for (int i = 0; i < t; ++i)
            for (Vertex v : rotation.partition.parts[i]) part_mask[i] |= bit(v);
    }
};

// Prefix test for |S| <= target (below) with epsilon 1/2, in integers:
// sum_{i<j} f_i < j(target + 1/2)/t  <=>  2t * sum < j(2 target + 1).
bool prefix_below_ok(const std::vector<int>& counts, int target) {
    const std::int64_t t = static_cast<std::int64_t>(counts.size());
    std::int64_t sum = 0;
    for (std::int64_t j = 1; j <= t; ++j) {
        sum += counts[j - 1];
        if (2 * t * sum >= j * (2 * target + 1)) return false;
    }
    return true;
}

// Prefix test for |S| >= target (above): 2t * sum > j(2 target - 1).
bool prefix_above_possible(const std::vector<int>& ceiling, int target) {
    const std::int64_t t = static_cast<std::int64_t>(ceiling.size());
    std::int64_t sum = 0;
    for (std::int64_t j = 1; j <= t; ++j) {
        sum += ceiling[j - 1];
        if (2 * t * sum <= j * (2 * target - 1)) return false;
    }
    return true;
}

class MinSearch {
public:
    MinSearch(const MaskGraph& g, Variant variant, Budget& budget, const PartLayout* layout)
        : g_(g), variant_(variant), budget_(budget), layout_(layout), max_degree_(0) {
        for (int v = 0; v < g.n; ++v) max_degree_ = std::max(max_degree_, popcount(g.open[v]));
        if (layout_) counts_.assign(layout_->t, 0);
    }

    std::optional<Mask> solve_at(int target) {
        target_ = target;
        best_.reset();
        switch (variant_) {
            case Variant::Dominating: dominating(0, 0, 0); break;
            case Variant::TotalDominating: total(0, 0, 0); break;
            case Variant::PairedDominating: paired(0, 0, 0); break;
        }
        return best_;
    }

    std::uint64_t nodes = 0;
    std::uint64_t pruned_by_prefix = 0;

private:
    void record(Mask s) {
        if (!best_ || lex_less(s, *best_)) best_ = s;
    }

    bool add(int v) {
        if (!layout_) return true;
        ++counts_[layout_->part_of[v]];
        if (prefix_below_ok(counts_, target_)) return true;
        --counts_[layout_->part_of[v]];
        ++pruned_by_prefix;
        return false;
    }

    void remove(int v) {
        if (layout_) --counts_[layout_->part_of[v]];
    }

    void step() {
        budget_.tick();
        ++nodes;
    }

    void dominating(Mask s, int size, Mask dominated) {
        step();
        const Mask open = g_.all() & ~dominated;
        if (!open) {
            record(s);
            return;
        }
        if (size == target_ || popcount(open) > (target_ - size) * (max_degree_ + 1)) return;
        const int u = lowest(open);
        for (Mask cand = g_.closed[u]; cand; cand &= cand - 1) {
            const int v = lowest(cand);
            if (!add(v)) continue;
            dominating(s | bit(v), size + 1, dominated | g_.closed[v]);
            remove(v);
        }
    }

    void total(Mask s, int size, Mask covered) {
        step();
        const Mask open = g_.all() & ~covered;
        if (!open) {
            record(s);
            return;
        }
        if (size == target_ || popcount(open) > (target_ - size) * max_degree_) return;
        const int u = lowest(open);
        for (Mask cand = g_.open[u]; cand; cand &= cand - 1) {
            const int v = lowest(cand);
            if (s & bit(v)) continue;
            if (!add(v)) continue;
            total(s | bit(v), size + 1, covered | g_.open[v]);
            remove(v);
        }
    }

    // Branches on a matched pair (a, b) with a in N[u] for the lowest undominated u.
    void paired(Mask s, int size, Mask dominated) {
        step();
        const Mask open = g_.all() & ~dominated;
        if (!open) {
            record(s);
            return;
        }
        if (size + 2 > target_ || popcount(open) > (target_ - size) * max_degree_) return;
        const int u = lowest(open);
        for (Mask as = g_.closed[u]; as; as &= as - 1) {
            const int a = lowest(as);
            if (!add(a)) continue;
            for (Mask bs = g_.open[a] & ~s; bs; bs &= bs - 1) {
                const int b = lowest(bs);
                if (!add(b)) continue;
                paired(s | bit(a) | bit(b), size + 2, dominated | g_.closed[a] | g_.closed[b]);
                remove(b);
            }
            remove(a);
        }
    }

    const MaskGraph& g_;
    Variant variant_;
    Budget& budget_;
    const PartLayout* layout_;
    int max_degree_;
    int target_ = 0;
    std::vector<int> counts_;
    std::optional<Mask> best_;
};

class MaxMinimalSearch {
public:
    MaxMinimalSearch(const MaskGraph& g, bool total, Budget& budget, const PartLayout* layout)
        : g_(g), total_(total), budget_(budget), layout_(layout) {}

    void run() { descend(0, 0, 0); }

    int best_size = 0;
    Mask best = 0;
    std::uint64_t nodes = 0;
    std::uint64_t pruned_by_prefix = 0;

private:
    const Mask& nbhd(int v) const { return total_ ? g_.open[v] : g_.closed[v]; }

    bool valid_leaf(Mask in) const {
        return total_ ? masks::is_total_dominating(g_, in) && masks::private_neighbor_criterion(g_, in)
                      : masks::is_dominating(g_, in) && masks::closed_private_neighbor_criterion(g_, in);
    }

    // Every member still has a neighbour that could stay private.
    bool members_can_stay_minimal(Mask in) const {
        for (Mask rest = in; rest; rest &= rest - 1) {
            const int v = lowest(rest);
            bool possible = false;
            for (Mask w = nbhd(v); w && !possible; w &= w - 1) possible = popcount(nbhd(lowest(w)) & in) == 1;
            if (!possible) return false;
        }
        return true;
    }

    bool someone_starved(Mask excluded, Mask affected) const {
        for (Mask w = affected; w; w &= w - 1)
            if ((nbhd(lowest(w)) & ~excluded) == 0) return true;
        return false;
    }

    void descend(int i, Mask in, Mask out) {
        budget_.tick();
        ++nodes;
        const int size = popcount(in);
        if (i == g_.n) {
            if (size > best_size && valid_leaf(in)) {
                best_size = size;
                best = in;
            }
            return;
        }
        if (size + (g_.n - i) <= best_size) return;
        if (layout_) {
            std::vector<int> ceiling(layout_->t, 0);
            const Mask open = ~out;
            for (int p = 0; p < layout_->t; ++p) ceiling[p] = popcount(layout_->part_mask[p] & open);
            if (!prefix_above_possible(ceiling, best_size + 1)) {
                ++pruned_by_prefix;
                return;
            }
        }
        const Mask with = in | bit(i);
        if (members_can_stay_minimal(with)) descend(i + 1, with, out);
        const Mask without = out | bit(i);
        // Only vertices whose neighbourhood contains i can newly starve.
        Mask affected = 0;
        for (int w = 0; w < g_.n; ++w)
            if (nbhd(w) & bit(i)) affected |= bit(w);
        if (!someone_starved(without, affected)) descend(i + 1, in, without);
    }

    const MaskGraph& g_;
    bool total_;
    Budget& budget_;
    const PartLayout* layout_;
};

}  // namespace

SolveReport min_parameter(const Graph& g, Variant variant, Budget& budget, const RotationContext* rotation) {
    require_desk_scale(g);
    if (variant != Variant::Dominating) require_no_isolated(g, to_string(variant).c_str());
    MaskGraph mg(g);
    std::optional<PartLayout> layout;
    if (rotation) {
        rotation->verify(g);
        layout.emplace(g, *rotation);
    }
    MinSearch search(mg, variant, budget, layout ? &*layout : nullptr);
    const int first = variant == Variant::Dominating ? 1 : 2;
    const int stride = variant == Variant::PairedDominating ? 2 : 1;
    for (int target = first; target <= g.vertex_count(); target += stride) {
        if (auto found = search.solve_at(target)) {
            SolveReport report;
            report.value = popcount(*found);
            report.witness = VertexSet::from_mask64(g.vertex_count(), *found);
            report.nodes_explored = search.nodes;
            report.pruned_by_prefix = search.pruned_by_prefix;
            if (!satisfies(g, report.witness, variant))
                throw std::logic_error("solver witness failed re-validation");
            return report;
        }
    }
    throw InputError("no " + to_string(variant) + " set exists for this graph");
}

SolveReport max_minimal_parameter(const Graph& g, Variant variant, Budget& budget, const RotationContext* rotation) {
    require_desk_scale(g);
    if (variant == Variant::PairedDominating)
        throw InputError("upper paired domination is not supported");
    const bool total = variant == Variant::TotalDominating;
    if (total) require_no_isolated(g, "total domination");
    MaskGraph mg(g);
    std::optional<PartLayout> layout;
    if (rotation) {
        rotation->verify(g);
        layout.emplace(g, *rotation);
    }
    MaxMinimalSearch search(mg, total, budget, layout ? &*layout : nullptr);
    search.run();
    SolveReport report;
    report.value = search.best_size;
    report.witness = VertexSet::from_mask64(g.vertex_count(), search.best);
    report.nodes_explored = search.nodes;
    report.pruned_by_prefix = search.pruned_by_prefix;
    if (report.value == 0) throw InputError("no minimal " + to_string(variant) + " set exists for this graph");
    bool ok = total ? is_minimal_total_dominating(g, report.witness) : is_minimal_dominating(g, report.witness);
    if (!ok) throw std::logic_error("solver witness failed re-validation");
    return report;
}

// --- searches over parts ---------------------------------------------------

namespace {

std::vector<std::vector<Mask>> part_subsets(const PartLayout& layout, bool ascending) {
    std::vector<std::vector<Mask>> out(layout.t);
    for (int p = 0; p < layout.t; ++p) {
        const Mask full = layout.part_mask[p];
        std::vector<Mask>& subs = out[p];
        for (Mask sub = full;; sub = (sub - 1) & full) {
            subs.push_back(sub);
            if (sub == 0) break;
        }
        std::sort(subs.begin(), subs.end(), [&](Mask a, Mask b) {
            if (popcount(a) != popcount(b)) return ascending ? popcount(a) < popcount(b) : popcount(a) > popcount(b);
            return lex_less(a, b);
        });
    }
    return out;
}

class PartSearch {
public:
    enum class Mode { Below, AboveMinimal, Redomination };

    PartSearch(const Graph& g, const RotationContext& rotation, Variant variant, Mode mode, const Rational& bound,
               Budget& budget)
        : g_(g), mg_(g), layout_(g, rotation), variant_(variant), mode_(mode), bound_(bound), budget_(budget) {
        subsets_ = part_subsets(layout_, mode_ != Mode::AboveMinimal);
        counts_.assign(layout_.t, 0);
    }

    PrefixSearchResult run() {
        PrefixSearchResult result;
        if (descend(0, 0, 0, 0)) {
            result.witness = VertexSet::from_mask64(g_.vertex_count(), found_);
            result.part_counts = counts_;
        }
        result.nodes_explored = nodes_;
        result.pruned_by_prefix = pruned_;
        return result;
    }

private:
    const Mask& domination_nbhd(int v) const {
        return variant_ == Variant::TotalDominating ? mg_.open[v] : mg_.closed[v];
    }

    bool prefix_ok(int j, int sum) const {
        const Rational lhs(static_cast<std::int64_t>(sum) * layout_.t);
        const Rational rhs = bound_ * Rational(j);
        return mode_ == Mode::AboveMinimal ? lhs > rhs : lhs < rhs;
    }

    // rd prefix sums can only grow as S grows, so partial values are lower bounds.
    bool rd_prefix_possible(Mask s) const {
        std::int64_t sum = 0;
        for (int j = 1; j <= layout_.t; ++j) {
            for (Mask rest = layout_.part_mask[j - 1]; rest; rest &= rest - 1)
                sum += popcount(mg_.closed[lowest(rest)] & s) - 1;
            if (!(Rational(sum * layout_.t) < bound_ * Rational(j))) return false;
        }
        return true;
    }

    bool feasible(Mask s, Mask decided) const {
        for (int w = 0; w < mg_.n; ++w) {
            const Mask around = domination_nbhd(w);
            if ((around & ~decided) == 0 && (around & s) == 0) return false;
        }
        if (variant_ == Variant::PairedDominating && mode_ == Mode::Below) {
            for (Mask rest = s; rest; rest &= rest - 1) {
                const int v = lowest(rest);
                if ((mg_.open[v] & ~decided) == 0 && (mg_.open[v] & s) == 0) return false;
            }
        }
        if (mode_ == Mode::AboveMinimal) {
            for (Mask rest = s; rest; rest &= rest - 1) {
                const int v = lowest(rest);
                bool possible = false;
                for (Mask w = domination_nbhd(v); w && !possible; w &= w - 1)
                    possible = popcount(domination_nbhd(lowest(w)) & s) == 1;
                if (!possible) return false;
            }
        }
        return true;
    }

    bool accept(Mask s) const {
        switch (mode_) {
            case Mode::Below:
                switch (variant_) {
                    case Variant::Dominating: return masks::is_dominating(mg_, s);
                    case Variant::TotalDominating: return masks::is_total_dominating(mg_, s);
                    case Variant::PairedDominating: return masks::is_paired_dominating(mg_, s);
                }
                return false;
            case Mode::AboveMinimal:
                return variant_ == Variant::TotalDominating
                           ? masks::is_total_dominating(mg_, s) && masks::private_neighbor_criterion(mg_, s)
                           : masks::is_dominating(mg_, s) && masks::closed_private_neighbor_criterion(mg_, s);
            case Mode::Redomination: {
                if (!masks::is_dominating(mg_, s)) return false;
                return rd_prefix_possible(s);
            }
        }
        return false;
    }

    bool descend(int j, Mask s, Mask decided, int prefix) {
        budget_.tick();
        ++nodes_;
        if (j == layout_.t) {
            if (!accept(s)) return false;
            found_ = s;
            return true;
        }
        const Mask next_decided = decided | layout_.part_mask[j];
        for (Mask sub : subsets_[j]) {
            const Mask next = s | sub;
            const int next_prefix = prefix + popcount(sub);
            if (mode_ == Mode::Redomination) {
                if (!rd_prefix_possible(next)) {
                    ++pruned_;
                    continue;
                }
            } else if (!prefix_ok(j + 1, next_prefix)) {
                ++pruned_;
                // Subsets are ordered by size, so the rest fail as well.
                break;
            }
            if (!feasible(next, next_decided)) continue;
            counts_[j] = popcount(sub);
            if (descend(j + 1, next, next_decided, next_prefix)) return true;
        }
        counts_[j] = 0;
        return false;
    }

    const Graph& g_;
    MaskGraph mg_;
    PartLayout layout_;
    Variant variant_;
    Mode mode_;
    Rational bound_;
    Budget& budget_;
    std::vector<std::vector<Mask>> subsets_;
    std::vector<int> counts_;
    Mask found_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t pruned_ = 0;
};

}  // namespace

PrefixSearchResult prefix_bounded_search(const Graph& g, const RotationContext& rotation, Variant variant,
                                         const Rational& bound, Direction direction, Budget& budget) {
    require_desk_scale(g);
    rotation.verify(g);
    if (variant != Variant::Dominating) require_no_isolated(g, to_string(variant).c_str());
    if (direction == Direction::StrictlyAbove && variant == Variant::PairedDominating)
        throw InputError("upper paired domination is not supported");
    auto mode = direction == Direction::StrictlyBelow ? PartSearch::Mode::Below : PartSearch::Mode::AboveMinimal;
    return PartSearch(g, rotation, variant, mode, bound, budget).run();
}

PrefixSearchResult prefix_pruned_search(const Graph& g, const RotationContext& rotation, Variant variant, int h,
                                        const Rational& epsilon, Budget& budget) {
    BoundSpec{h, epsilon}.validate();
    return prefix_bounded_search(g, rotation, variant, Rational(h) + epsilon, Direction::StrictlyBelow, budget);
}

bool decide_parameter_via_corollary(const Graph& g, const RotationContext& rotation, Variant variant, int h,
                                    const Rational& epsilon, Budget& budget, Extremum extremum) {
    BoundSpec{h, epsilon}.validate();
    const Rational hi = Rational(h) + epsilon;
    const Rational lo = Rational(h) - epsilon;
    if (extremum == Extremum::Minimum) {
        if (!prefix_bounded_search(g, rotation, variant, hi, Direction::StrictlyBelow, budget).witness) return false;
        return !prefix_bounded_search(g, rotation, variant, lo, Direction::StrictlyBelow, budget).witness;
    }
    if (!prefix_bounded_search(g, rotation, variant, lo, Direction::StrictlyAbove, budget).witness) return false;
    return !prefix_bounded_search(g, rotation, variant, hi, Direction::StrictlyAbove, budget).witness;
}

int rd_target(const Graph& g, int h) {
    if (!g.is_regular()) throw InputError("re-domination bookkeeping needs a regular graph");
    const int k = g.vertex_count() == 0 ? 0 : g.degree(0);
    return (k + 1) * h - g.vertex_count();
}

PrefixSearchResult rd_bounded_search(const Graph& g, const RotationContext& rotation, const Rational& bound,
                                     Budget& budget) {
    require_desk_scale(g);
    if (!g.is_regular()) throw InputError("re-domination bookkeeping needs a regular graph");
    rotation.verify(g);
    auto result = PartSearch(g, rotation, Variant::Dominating, PartSearch::Mode::Redomination, bound, budget).run();
    if (result.witness) {
        for (int i = 0; i < rotation.partition.count(); ++i)
            result.part_counts[i] = rd_of(g, *result.witness, rotation.partition.parts[i]);
    }
    return result;
}

PrefixSearchResult rd_prefix_pruned_search(const Graph& g, const RotationContext& rotation, int h,
                                           const Rational& epsilon, Budget& budget) {
    BoundSpec{h, epsilon}.validate();
    return rd_bounded_search(g, rotation, Rational(rd_target(g, h)) + epsilon, budget);
}

bool decide_domination_via_rd(const Graph& g, const RotationContext& rotation, int h, const Rational& epsilon,
                              Budget& budget) {
    BoundSpec{h, epsilon}.validate();
    const Rational t(rd_target(g, h));
    if (!rd_bounded_search(g, rotation, t + epsilon, budget).witness) return false;
    return !rd_bounded_search(g, rotation, t - epsilon, budget).witness;
}

TorusCheck check_paired_torus(int n, Budget& budget) {
    Graph g = cartesian_cycles(5, n);
    auto rotation = torus_columns_context(5, n);
    TorusCheck check;
    check.n = n;
    check.expected = h_pair(n);
    check.report = min_parameter(g, Variant::PairedDominating, budget, &rotation);
    return check;
}

TorusCheck check_upper_total_torus(int n, Budget& budget) {
    Graph g = cartesian_cycles(4, n);
    auto rotation = torus_columns_context(4, n);
    TorusCheck check;
    check.n = n;
    check.expected = 2 * n;
    check.report = max_minimal_parameter(g, Variant::TotalDominating, budget, &rotation);
    return check;
}

}  // namespace prefixcert
