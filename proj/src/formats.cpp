#include "prefixcert/formats.hpp"

#include "prefixcert/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace prefixcert {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        auto pos = text.find(sep, begin);
        out.push_back(text.substr(begin, pos == std::string_view::npos ? std::string_view::npos : pos - begin));
        if (pos == std::string_view::npos) break;
        begin = pos + 1;
    }
    return out;
}

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw InputError(std::string("bad ") + what + ": '" + std::string(text) + "'");
    return value;
}

template <typename T>
T checked_get(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("malformed ") + what + ": missing \"" + key + "\"");
    return j.at(key);
}

Json edge_to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Edge edge_from_json(const Json& j) {
    auto pair = checked_get<std::vector<int>>(j, "edge");
    if (pair.size() != 2) throw InputError("an edge must be a pair [u, v]");
    return Edge(pair[0], pair[1]);
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (auto item : split(text, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (auto item : split(text, ',')) out.push_back(parse_int(item, "integer"));
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("graph file must start with \"n m\"");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        if (!(in >> u >> v)) throw InputError("graph file lists fewer than " + std::to_string(m) + " edges");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (in >> rest) throw InputError("trailing data after " + std::to_string(m) + " edges in graph file");
    return g;
}

Graph graph_from_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') return parse_graph(read_text_file(spec.substr(1)));
    auto fields = split(spec, ':');
    const std::string_view kind = fields.front();
    auto expect = [&](std::size_t count) {
        if (fields.size() != count) throw InputError("graph spec '" + spec + "' has the wrong number of fields");
    };
    if (kind == "cycle") {
        expect(2);
        return cycle(parse_int(fields[1], "cycle length"));
    }
    if (kind == "path") {
        expect(2);
        return path(parse_int(fields[1], "path length"));
    }
    if (kind == "complete") {
        expect(2);
        return complete(parse_int(fields[1], "vertex count"));
    }
    if (kind == "torus") {
        expect(3);
        return cartesian_cycles(parse_int(fields[1], "m"), parse_int(fields[2], "n"));
    }
    if (kind == "kmn") {
        expect(3);
        return complete_bipartite(parse_int(fields[1], "m"), parse_int(fields[2], "n"));
    }
    if (kind == "circulant") {
        expect(3);
        return circulant(parse_int(fields[1], "vertex count"), parse_int_list(fields[2]));
    }
    throw InputError("unknown graph spec '" + spec + "'");
}

Json rational_to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    return Rational(checked_get<std::int64_t>(field(j, "num", "rational"), "rational"),
                    checked_get<std::int64_t>(field(j, "den", "rational"), "rational"));
}

Json partition_to_json(const VertexPartition& p) {
    Json parts = Json::array();
    for (const auto& part : p.parts) parts.push_back(part);
    return Json{{"parts", parts}};
}

VertexPartition partition_from_json(const Json& j) {
    VertexPartition p;
    p.parts = checked_get<std::vector<std::vector<Vertex>>>(field(j, "parts", "partition"), "partition");
    return p;
}

Json decomposition_to_json(const EdgeDecomposition& d) {
    Json pieces = Json::array();
    for (const auto& piece : d.pieces) {
        Json edges = Json::array();
        for (const auto& e : piece.edges) edges.push_back(edge_to_json(e));
        pieces.push_back(Json{{"vertices", piece.vertices}, {"edges", edges}});
    }
    return Json{{"pieces", pieces}};
}

EdgeDecomposition decomposition_from_json(const Json& j) {
    EdgeDecomposition d;
    const Json& pieces = field(j, "pieces", "decomposition");
    if (!pieces.is_array()) throw InputError("malformed decomposition: \"pieces\" must be an array");
    for (const auto& item : pieces) {
        Piece piece;
        piece.vertices = checked_get<std::vector<Vertex>>(field(item, "vertices", "piece"), "piece");
        std::sort(piece.vertices.begin(), piece.vertices.end());
        for (const auto& e : field(item, "edges", "piece")) piece.edges.push_back(edge_from_json(e));
        std::sort(piece.edges.begin(), piece.edges.end());
        d.pieces.push_back(std::move(piece));
    }
    return d;
}

Json drawing_to_json(const AbstractDrawing& drawing, const std::string& graph_ref) {
    Json crossings = Json::array();
    for (const auto& [a, b] : drawing.crossings) crossings.push_back(Json::array({edge_to_json(a), edge_to_json(b)}));
    return Json{{"surface", drawing.surface}, {"graph", graph_ref}, {"crossings", crossings}};
}

AbstractDrawing drawing_from_json(const Json& j) {
    AbstractDrawing drawing;
    drawing.surface = j.contains("surface") ? checked_get<std::string>(j.at("surface"), "drawing") : "plane";
    drawing.graph = graph_from_spec(checked_get<std::string>(field(j, "graph", "drawing"), "drawing"));
    for (const auto& item : field(j, "crossings", "drawing")) {
        if (!item.is_array() || item.size() != 2) throw InputError("a crossing must be a pair of edges");
        drawing.crossings.emplace_back(edge_from_json(item[0]), edge_from_json(item[1]));
    }
    return drawing;
}

std::string to_string(Direction direction) { return direction == Direction::StrictlyBelow ? "below" : "above"; }

Direction parse_direction(const std::string& text) {
    if (text == "below") return Direction::StrictlyBelow;
    if (text == "above") return Direction::StrictlyAbove;
    throw InputError("direction must be 'below' or 'above', got '" + text + "'");
}

Json certificate_to_json(const RotationCertificate& cert) {
    Json prefix = Json::array();
    for (const auto& p : cert.prefix_sums) prefix.push_back(rational_to_json(p));
    return Json{{"direction", to_string(cert.direction)},
                {"k", cert.k},
                {"n", cert.prefix_sums.size()},
                {"h", rational_to_json(cert.h)},
                {"prefix", prefix}};
}

RotationCertificate certificate_from_json(const Json& j) {
    RotationCertificate cert;
    cert.direction = parse_direction(checked_get<std::string>(field(j, "direction", "certificate"), "certificate"));
    cert.k = checked_get<std::size_t>(field(j, "k", "certificate"), "certificate");
    cert.h = rational_from_json(field(j, "h", "certificate"));
    for (const auto& p : field(j, "prefix", "certificate")) cert.prefix_sums.push_back(rational_from_json(p));
    if (j.contains("n") && checked_get<std::size_t>(j.at("n"), "certificate") != cert.prefix_sums.size())
        throw InputError("certificate \"n\" disagrees with the prefix table length");
    return cert;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace prefixcert
