#include "prefixcert/graph.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>
#include <bit>

namespace prefixcert {

VertexSet::VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw InputError("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_members(int universe, const std::vector<Vertex>& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask64(int universe, std::uint64_t mask) {
    if (universe > 64) throw InputError("64-bit mask cannot describe a universe above 64");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = universe == 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
    return s;
}

void VertexSet::check(Vertex v) const {
    if (v < 0 || v >= universe_)
        throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
}

void VertexSet::insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
    int count = 0;
    for (auto w : words_) count += std::popcount(w);
    return count;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < std::min(words_.size(), other.words_.size()); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < std::min(words_.size(), other.words_.size()); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
    rows_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " (simple graphs only)");
    if (rows_[u].contains(v))
        throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v) + " (simple graphs only)");
    rows_[u].insert(v);
    rows_[v].insert(u);
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].contains(v);
}

VertexSet Graph::closed_neighbor_set(Vertex v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& keep) const {
    auto members = keep.members();
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(members.size()));
    for (Vertex u : members)
        for (Vertex v : adj_[u])
            if (u < v && index[v] >= 0) sub.add_edge(index[u], index[v]);
    return sub;
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InputError("complete bipartite graph needs m, n >= 1");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph cartesian_cycles(int m, int n) {
    if (m < 3 || n < 3) throw InputError("C_m x C_n needs m, n >= 3");
    Graph g(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_edge(torus_id(n, i, j), torus_id(n, i, (j + 1) % n));
            g.add_edge(torus_id(n, i, j), torus_id(n, (i + 1) % m, j));
        }
    return g;
}

Graph circulant(int n, const std::vector<int>& strides) {
    if (n < 3) throw InputError("circulant needs n >= 3");
    if (strides.empty()) throw InputError("circulant needs at least one stride");
    std::vector<int> sorted = strides;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("circulant strides must be distinct");
    for (int a : sorted)
        if (a < 1 || a > n / 2)
            throw InputError("stride " + std::to_string(a) + " outside 1.." + std::to_string(n / 2));
    Graph g(n);
    for (int a : sorted)
        for (int i = 0; i < n; ++i) {
            int j = (i + a) % n;
            if (!g.has_edge(i, j)) g.add_edge(i, j);
        }
    return g;
}

}  // namespace prefixcert
