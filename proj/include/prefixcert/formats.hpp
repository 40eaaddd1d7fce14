#pragma once

// File formats and the graph spec mini-language.
//
//   graph file:     "n m" then m lines "u v" (0-based)
//   partition:      {"parts":[[ids],...]}
//   decomposition:  {"pieces":[{"vertices":[ids],"edges":[[u,v],...]},...]}
//   drawing:        {"surface":"plane","graph":"<spec>","crossings":[[[u1,v1],[u2,v2]],...]}
//   certificate:    {"direction":"below"|"above","k":int,"n":int,"h":{"num":..,"den":..},"prefix":[...]}
//   graph specs:    cycle:n  path:n  torus:m:n  circulant:n:a,b  complete:n  kmn:m:n  @path

#include "prefixcert/crossing.hpp"
#include "prefixcert/cyclic_core.hpp"
#include "prefixcert/graph.hpp"
#include "prefixcert/structures.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace prefixcert {

using Json = nlohmann::ordered_json;

std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

/// Builds a graph from a spec; "@path" reads a graph file.
Graph graph_from_spec(const std::string& spec);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json partition_to_json(const VertexPartition& p);
VertexPartition partition_from_json(const Json& j);

Json decomposition_to_json(const EdgeDecomposition& d);
EdgeDecomposition decomposition_from_json(const Json& j);

/// graph_ref is stored verbatim in the "graph" field.
Json drawing_to_json(const AbstractDrawing& drawing, const std::string& graph_ref);
/// Resolves "graph" through graph_from_spec.
AbstractDrawing drawing_from_json(const Json& j);

Json certificate_to_json(const RotationCertificate& cert);
RotationCertificate certificate_from_json(const Json& j);

std::string to_string(Direction direction);
Direction parse_direction(const std::string& text);

/// Pretty JSON with two-space indent and a trailing newline; the on-disk form.
std::string dump(const Json& j);

}  // namespace prefixcert
