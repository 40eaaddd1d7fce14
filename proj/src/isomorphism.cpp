#include "prefixcert/isomorphism.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>
#include <map>

namespace prefixcert {

namespace {

// Colour refinement run on both graphs with a shared palette, so equal
// colours mean the same refined class on either side.
struct Refinement {
    std::vector<int> color_a;
    std::vector<int> color_b;
    bool histograms_match = true;
};

std::vector<int> histogram(const std::vector<int>& colors, int palette) {
    std::vector<int> h(palette, 0);
    for (int c : colors) ++h[c];
    return h;
}

Refinement refine(const Graph& a, const Graph& b) {
    Refinement r;
    r.color_a.resize(a.vertex_count());
    r.color_b.resize(b.vertex_count());
    for (Vertex v = 0; v < a.vertex_count(); ++v) r.color_a[v] = a.degree(v);
    for (Vertex v = 0; v < b.vertex_count(); ++v) r.color_b[v] = b.degree(v);
    int classes = -1;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        auto signature = [](const Graph& g, const std::vector<int>& color, Vertex v) {
            std::vector<int> around;
            for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            return std::make_pair(color[v], std::move(around));
        };
        std::vector<std::pair<int, std::vector<int>>> sig_a, sig_b;
        for (Vertex v = 0; v < a.vertex_count(); ++v) sig_a.push_back(signature(a, r.color_a, v));
        for (Vertex v = 0; v < b.vertex_count(); ++v) sig_b.push_back(signature(b, r.color_b, v));
        for (const auto& s : sig_a) palette.emplace(s, 0);
        for (const auto& s : sig_b) palette.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : palette) id = next++;
        for (Vertex v = 0; v < a.vertex_count(); ++v) r.color_a[v] = palette[sig_a[v]];
        for (Vertex v = 0; v < b.vertex_count(); ++v) r.color_b[v] = palette[sig_b[v]];
        if (histogram(r.color_a, next) != histogram(r.color_b, next)) {
            r.histograms_match = false;
            return r;
        }
        if (next == classes) return r;
        classes = next;
    }
}

class Matcher {
public:
    Matcher(const Graph& a, const Graph& b, const Refinement& r, std::uint64_t max_nodes)
        : a_(a), b_(b), r_(r), max_nodes_(max_nodes), map_(a.vertex_count(), -1), used_(b.vertex_count(), 0) {
        order_ = search_order();
    }

    std::optional<std::vector<Vertex>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    // Next vertex: most already-ordered neighbours, then rarest colour, then lowest id.
    std::vector<Vertex> search_order() const {
        const int n = a_.vertex_count();
        std::map<int, int> freq;
        for (int c : r_.color_a) ++freq[c];
        std::vector<char> placed(n, 0);
        std::vector<int> placed_neighbors(n, 0);
        std::vector<Vertex> order;
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
                    (placed_neighbors[v] == placed_neighbors[best] && freq[r_.color_a[v]] < freq[r_.color_a[best]]))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (Vertex w : a_.neighbors(best)) ++placed_neighbors[w];
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (++nodes_ > max_nodes_)
            throw BudgetExceeded("isomorphism search exceeded " + std::to_string(max_nodes_) + " nodes");
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        for (Vertex w = 0; w < b_.vertex_count(); ++w) {
            if (used_[w] || r_.color_b[w] != r_.color_a[v]) continue;
            if (!consistent(v, w, depth)) continue;
            map_[v] = w;
            used_[w] = 1;
            if (extend(depth + 1)) return true;
            used_[w] = 0;
            map_[v] = -1;
        }
        return false;
    }

    bool consistent(Vertex v, Vertex w, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex u = order_[i];
            if (a_.neighbor_set(v).contains(u) != b_.neighbor_set(w).contains(map_[u])) return false;
        }
        return true;
    }

    const Graph& a_;
    const Graph& b_;
    const Refinement& r_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    auto refinement = refine(a, b);
    if (!refinement.histograms_match) return std::nullopt;
    return Matcher(a, b, refinement, options.max_nodes).run();
}

bool isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
    if (a == b) return true;
    return find_isomorphism(a, b, options).has_value();
}

}  // namespace prefixcert
