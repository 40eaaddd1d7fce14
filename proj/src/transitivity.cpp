#include "prefixcert/transitivity.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>

namespace prefixcert {

namespace {

Graph relabelled(const Graph& g, const VertexSet& vertices, const std::vector<Edge>& edges) {
    auto members = vertices.members();
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
    Graph w(static_cast<int>(members.size()));
    for (const auto& e : edges) w.add_edge(index[e.u], index[e.v]);
    return w;
}

// All windows of each length must match the window starting at 0.
template <typename WindowFn>
bool all_windows_isomorphic(int t, WindowFn window, const IsomorphismOptions& options) {
    for (int length = 1; length <= t; ++length) {
        Graph reference = window(0, length);
        for (int start = 1; start < t; ++start)
            if (!isomorphic(reference, window(start, length), options)) return false;
    }
    return true;
}

}  // namespace

Graph decomposition_window(const Graph& g, const EdgeDecomposition& d, int start, int length) {
    const int t = d.count();
    VertexSet vertices(g.vertex_count());
    std::vector<Edge> edges;
    for (int i = 0; i < std::min(length, t); ++i) {
        const auto& piece = d.pieces[(start + i) % t];
        for (Vertex v : piece.vertices) vertices.insert(v);
        edges.insert(edges.end(), piece.edges.begin(), piece.edges.end());
    }
    return relabelled(g, vertices, edges);
}

Graph partition_window(const Graph& g, const VertexPartition& p, int start, int length) {
    const int t = p.count();
    VertexSet vertices(g.vertex_count());
    for (int i = 0; i < std::min(length, t); ++i)
        for (Vertex v : p.parts[(start + i) % t]) vertices.insert(v);
    return g.induced(vertices);
}

bool is_transitive_decomposition(const Graph& g, const EdgeDecomposition& d, const IsomorphismOptions& options) {
    d.validate(g);
    return all_windows_isomorphic(
        d.count(), [&](int start, int length) { return decomposition_window(g, d, start, length); }, options);
}

bool is_transitive_partition(const Graph& g, const VertexPartition& p, const IsomorphismOptions& options) {
    p.validate(g);
    return all_windows_isomorphic(
        p.count(), [&](int start, int length) { return partition_window(g, p, start, length); }, options);
}

namespace {

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, int t, Budget& budget, const IsomorphismOptions& options)
        : g_(g), t_(t), part_size_(g.vertex_count() / t), budget_(budget), options_(options),
          assignment_(g.vertex_count(), -1), fill_(t, 0) {}

    std::optional<VertexPartition> run() {
        if (descend(0)) return found_;
        return std::nullopt;
    }

private:
    bool descend(Vertex v) {
        budget_.tick();
        const int n = g_.vertex_count();
        if (v == n) return leaf();
        // Vertex 0 always sits in part 0, fixing the rotation.
        const int last = v == 0 ? 0 : t_ - 1;
        for (int part = 0; part <= last; ++part) {
            if (fill_[part] == part_size_) continue;
            assignment_[v] = part;
            ++fill_[part];
            if (descend(v + 1)) return true;
            --fill_[part];
            assignment_[v] = -1;
        }
        return false;
    }

    bool leaf() {
        VertexPartition p;
        p.parts.assign(t_, {});
        for (Vertex v = 0; v < g_.vertex_count(); ++v) p.parts[assignment_[v]].push_back(v);
        // Reflection keeps part 0 and swaps part i with part t-i; keep the
        // orientation whose part 1 has the smaller first vertex.
        if (t_ >= 3 && p.parts[1].front() > p.parts[t_ - 1].front()) return false;
        if (!is_transitive_partition(g_, p, options_)) return false;
        found_ = std::move(p);
        return true;
    }

    const Graph& g_;
    int t_;
    int part_size_;
    Budget& budget_;
    const IsomorphismOptions& options_;
    std::vector<int> assignment_;
    std::vector<int> fill_;
    std::optional<VertexPartition> found_;
};

}  // namespace

std::optional<VertexPartition> find_transitive_partition(const Graph& g, int t, Budget& budget,
                                                         const IsomorphismOptions& options) {
    const int n = g.vertex_count();
    if (t < 1 || t > n) throw InputError("partition size t must lie in 1.." + std::to_string(n));
    // Windows of length 1 are single parts, so all parts have equal size.
    if (n % t != 0) return std::nullopt;
    return PartitionSearch(g, t, budget, options).run();
}

}  // namespace prefixcert
