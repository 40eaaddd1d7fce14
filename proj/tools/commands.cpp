#include "commands.hpp"

#include "prefixcert/crossing.hpp"
#include "prefixcert/cyclic_core.hpp"
#include "prefixcert/domination.hpp"
#include "prefixcert/structures.hpp"
#include "prefixcert/transitivity.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

namespace prefixcert::cli {

Budget BudgetFlags::make() const {
    if (seconds <= 0) return Budget(nodes);
    return Budget(nodes, std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000)));
}

namespace {

std::vector<std::string> spec_fields(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) out.push_back(item);
    return out;
}

int field_int(const std::vector<std::string>& f, std::size_t i) { return parse_int_list(f.at(i)).at(0); }

Json members_json(const VertexSet& s) { return Json(s.members()); }

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

bool is_torus(const std::vector<std::string>& f) { return f.size() == 3 && f[0] == "torus"; }

VertexPartition resolve_partition(const std::string& graph_spec, const std::string& name) {
    if (name == "columns") {
        auto f = spec_fields(graph_spec);
        if (!is_torus(f)) throw InputError("--partition columns needs a torus:m:n graph");
        return columns_partition(field_int(f, 1), field_int(f, 2));
    }
    return partition_from_json(read_json_file(name));
}

RotationContext resolve_rotation(const std::string& graph_spec, const std::string& partition,
                                 const std::string& symmetry) {
    if (partition == "columns" && symmetry.empty()) {
        auto f = spec_fields(graph_spec);
        if (!is_torus(f)) throw InputError("--partition columns needs a torus:m:n graph");
        return torus_columns_context(field_int(f, 1), field_int(f, 2));
    }
    if (symmetry.empty()) throw InputError("a partition file needs --symmetry with {\"sigma\":[...]}");
    Json j = read_json_file(symmetry);
    if (!j.contains("sigma") || !j["sigma"].is_array()) throw InputError(symmetry + ": missing \"sigma\" array");
    CyclicSymmetry sigma;
    for (const auto& v : j["sigma"]) {
        if (!v.is_number_integer()) throw InputError(symmetry + ": sigma entries must be integers");
        sigma.sigma.push_back(v.get<int>());
    }
    return RotationContext{resolve_partition(graph_spec, partition), sigma};
}

EdgeDecomposition resolve_decomposition(const std::string& graph_spec, const std::string& name) {
    auto f = spec_fields(graph_spec);
    if (name == "stars") {
        if (f.size() == 3 && f[0] == "kmn") return star_decomposition_bipartite(field_int(f, 1), field_int(f, 2));
        if (f.size() == 2 && f[0] == "complete") return star_decomposition_complete(field_int(f, 1));
        throw InputError("--decomposition stars needs kmn:m:n or complete:n");
    }
    if (name == "circulant14") {
        if (f.size() != 3 || f[0] != "circulant" || parse_int_list(f[2]) != std::vector<int>{1, 4})
            throw InputError("--decomposition circulant14 needs circulant:4k:1,4");
        const int n = field_int(f, 1);
        if (n % 4 != 0) throw InputError("circulant14 needs a vertex count divisible by 4");
        return circulant14_decomposition(n / 4);
    }
    return decomposition_from_json(read_json_file(name));
}

std::vector<Vertex> resolve_order(const Graph& g, const std::string& order) {
    if (order == "natural") return natural_order(g);
    auto ids = parse_int_list(order);
    return std::vector<Vertex>(ids.begin(), ids.end());
}

Json certificate_or_null(const std::optional<RotationCertificate>& cert) {
    return cert ? certificate_to_json(*cert) : Json(nullptr);
}

// Rotation certificate on f_S(V_i) showing |S| < value + 1/2.
Json part_count_certificate(const VertexPartition& p, const VertexSet& s, int value) {
    std::vector<Rational> counts;
    Json raw = Json::array();
    for (const auto& part : p.parts) {
        int c = 0;
        for (Vertex v : part) c += s.contains(v);
        counts.emplace_back(c);
        raw.push_back(c);
    }
    auto cert = find_rotation(CyclicList(counts), Rational(2 * value + 1, 2), Direction::StrictlyBelow);
    return Json{{"part_counts", raw}, {"below", certificate_or_null(cert)}};
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

// --- certify ----------------------------------------------------------------

Result certify_sum(const CertifyArgs& args) {
    CyclicList xs(parse_rational_list(args.values));
    const Rational h = Rational::parse(args.h);
    auto cert = find_rotation(xs, h, parse_direction(args.direction));
    Json doc{{"result", cert ? "found" : "none"}, {"total", rational_to_json(total(xs))}};
    if (cert) doc["certificate"] = certificate_to_json(*cert);
    return {cert ? 0 : 1, doc, {}};
}

Result certify_equality(const CertifyArgs& args) {
    CyclicList xs(parse_rational_list(args.values));
    BoundSpec bound{Rational::parse(args.h), Rational::parse(args.epsilon)};
    auto cert = equality_certificate(xs, bound);
    Json doc{{"result", cert ? "found" : "none"}, {"total", rational_to_json(total(xs))}};
    if (cert) {
        doc["k1"] = cert->k1();
        doc["k2"] = cert->k2();
        doc["epsilon"] = rational_to_json(cert->epsilon);
        doc["below"] = certificate_to_json(cert->below);
        doc["above"] = certificate_to_json(cert->above);
    }
    return {cert ? 0 : 1, doc, {}};
}

Result certify_verify(const CertifyArgs& args) {
    CyclicList xs(parse_rational_list(args.values));
    auto cert = certificate_from_json(read_json_file(args.certificate_file));
    if (cert.prefix_sums.size() != xs.size()) throw InputError("certificate length does not match the list");
    // The stored h is the bound the certificate was issued against.
    const Rational h = args.h.empty() ? cert.h : Rational::parse(args.h);
    bool ok = verify_certificate(xs, h, cert);
    return {ok ? 0 : 1, Json{{"result", ok ? "verified" : "refuted"}, {"k", cert.k}}, {}};
}

// --- domination ----------------------------------------------------------------

Result domination_solve(const DominationArgs& args, const BudgetFlags& flags) {
    Graph g = graph_from_spec(args.graph);
    Variant variant = parse_variant(args.variant);
    std::optional<RotationContext> rotation;
    if (!args.partition.empty()) rotation = resolve_rotation(args.graph, args.partition, args.symmetry);
    Budget budget = flags.make();
    SolveReport report = args.upper ? max_minimal_parameter(g, variant, budget, rotation ? &*rotation : nullptr)
                                    : min_parameter(g, variant, budget, rotation ? &*rotation : nullptr);
    Json certificates = Json::object();
    if (rotation) certificates = part_count_certificate(rotation->partition, report.witness, report.value);
    Json doc{{"parameter", args.upper ? "upper-" + to_string(variant) : to_string(variant)},
             {"value", report.value},
             {"witness", members_json(report.witness)},
             {"nodes", report.nodes_explored},
             {"pruned_by_prefix", report.pruned_by_prefix},
             {"certificates", certificates}};
    return {0, doc, {}};
}

namespace {

Json torus_row(const TorusCheck& check, double seconds) {
    return Json{{"n", check.n},
                {"value", check.report.value},
                {"expected", check.expected},
                {"holds", check.holds()},
                {"witness", members_json(check.report.witness)},
                {"nodes", check.report.nodes_explored},
                {"seconds", seconds}};
}

}  // namespace

Result domination_verify_pair(const DominationArgs& args, const BudgetFlags& flags) {
    if (args.n < 3) throw InputError("--n must be at least 3");
    Budget budget = flags.make();
    auto start = std::chrono::steady_clock::now();
    auto check = check_paired_torus(args.n, budget);
    return {check.holds() ? 0 : 1, torus_row(check, elapsed(start)), {}};
}

Result domination_verify_upper_total(const DominationArgs& args, const BudgetFlags& flags) {
    if (args.n < 3) throw InputError("--n must be at least 3");
    Budget budget = flags.make();
    auto start = std::chrono::steady_clock::now();
    auto check = check_upper_total_torus(args.n, budget);
    return {check.holds() ? 0 : 1, torus_row(check, elapsed(start)), {}};
}

Result domination_corollary(const DominationArgs& args, const BudgetFlags& flags) {
    Graph g = graph_from_spec(args.graph);
    Variant variant = parse_variant(args.variant);
    if (args.partition.empty()) throw InputError("--partition is required");
    RotationContext rotation = resolve_rotation(args.graph, args.partition, args.symmetry);
    rotation.verify(g);
    const Rational eps = Rational::parse(args.epsilon);
    Budget budget = flags.make();
    Json doc{{"graph", args.graph}, {"variant", to_string(variant)}, {"h", args.h}, {"epsilon", rational_to_json(eps)}};
    bool holds = false;
    auto witness_json = [](const PrefixSearchResult& r) {
        return r.witness ? Json{{"witness", members_json(*r.witness)}, {"part_counts", r.part_counts}} : Json(nullptr);
    };
    if (args.via == "redundance") {
        if (variant != Variant::Dominating) throw InputError("--via redundance applies to --variant dominating");
        const int t = rd_target(g, args.h);
        auto plus = rd_prefix_pruned_search(g, rotation, args.h, eps, budget);
        auto minus = rd_bounded_search(g, rotation, Rational(t) - eps, budget);
        holds = plus.witness.has_value() && !minus.witness.has_value();
        doc["target"] = t;
        doc["plus"] = witness_json(plus);
        doc["minus"] = witness_json(minus);
    } else if (args.via == "size") {
        if (args.extremum == "min") {
            auto plus = prefix_bounded_search(g, rotation, variant, Rational(args.h) + eps, Direction::StrictlyBelow, budget);
            auto minus = prefix_bounded_search(g, rotation, variant, Rational(args.h) - eps, Direction::StrictlyBelow, budget);
            holds = plus.witness.has_value() && !minus.witness.has_value();
            doc["plus"] = witness_json(plus);
            doc["minus"] = witness_json(minus);
        } else if (args.extremum == "max") {
            if (variant == Variant::PairedDominating) throw InputError("--extremum max supports dominating and total");
            auto minus = prefix_bounded_search(g, rotation, variant, Rational(args.h) - eps, Direction::StrictlyAbove, budget);
            auto plus = prefix_bounded_search(g, rotation, variant, Rational(args.h) + eps, Direction::StrictlyAbove, budget);
            holds = minus.witness.has_value() && !plus.witness.has_value();
            doc["minus"] = witness_json(minus);
            doc["plus"] = witness_json(plus);
        } else {
            throw InputError("--extremum must be min or max");
        }
    } else {
        throw InputError("--via must be size or redundance");
    }
    doc["result"] = holds;
    doc["nodes"] = budget.nodes();
    return {holds ? 0 : 1, doc, {}};
}

// --- structures ------------------------------------------------------------------

Result partition_check(const StructureArgs& args) {
    Graph g = graph_from_spec(args.graph);
    VertexPartition p = resolve_partition(args.graph, args.partition);
    bool transitive = is_transitive_partition(g, p);
    return {transitive ? 0 : 1, Json{{"parts", p.count()}, {"transitive", transitive}}, {}};
}

Result partition_search(const StructureArgs& args, const BudgetFlags& flags) {
    Graph g = graph_from_spec(args.graph);
    if (args.t < 1 || args.t > g.vertex_count()) throw InputError("--t must lie in 1..|V|");
    Budget budget = flags.make();
    auto found = find_transitive_partition(g, args.t, budget);
    Json doc{{"t", args.t}, {"result", found ? "found" : "none"}, {"nodes", budget.nodes()}};
    if (found) doc["partition"] = partition_to_json(*found);
    return {found ? 0 : 1, doc, {}};
}

Result decomposition_check(const StructureArgs& args) {
    Graph g = graph_from_spec(args.graph);
    EdgeDecomposition d = resolve_decomposition(args.graph, args.decomposition);
    bool transitive = is_transitive_decomposition(g, d);
    return {transitive ? 0 : 1, Json{{"pieces", d.count()}, {"valid", true}, {"transitive", transitive}}, {}};
}

// --- drawings ----------------------------------------------------------------------

namespace {

Json violations_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations)
        out.push_back(Json{{"rule", v.rule},
                           {"pair", Json::array({Json::array({v.pair.first.u, v.pair.first.v}),
                                                 Json::array({v.pair.second.u, v.pair.second.v})})},
                           {"message", v.message}});
    return out;
}

}  // namespace

Result drawing_check(const DrawingArgs& args) {
    AbstractDrawing d = drawing_from_json(read_json_file(args.drawing));
    if (!args.graph.empty() && !(graph_from_spec(args.graph) == d.graph))
        throw InputError("--graph does not match the drawing's graph");
    auto violations = validate_drawing(d);
    Json doc{{"surface", d.surface}, {"valid", violations.empty()}, {"violations", violations_json(violations)}};
    if (!violations.empty()) return {2, doc, {}};
    doc["cr"] = cr_total(d);
    if (args.decomposition.empty()) return {0, doc, {}};
    const std::string spec = args.graph.empty() ? read_json_file(args.drawing).at("graph").get<std::string>() : args.graph;
    EdgeDecomposition dec = resolve_decomposition(spec, args.decomposition);
    auto weights = decomposition_weights(d, dec);
    auto cert = prefix_cr_certificate(weights, args.h, Rational::parse(args.epsilon), parse_direction(args.direction));
    doc["doubled_weights"] = weights.weights;
    doc["h"] = args.h;
    doc["result"] = cert ? "found" : "none";
    doc["certificate"] = certificate_or_null(cert);
    return {cert ? 0 : 1, doc, {}};
}

Result drawing_convex(const DrawingArgs& args) {
    Graph g = graph_from_spec(args.graph);
    AbstractDrawing d = convex_drawing(g, resolve_order(g, args.order));
    Json drawing = drawing_to_json(d, args.graph);
    if (args.emit.empty()) return {0, drawing, {}};
    write_text_file(args.emit, dump(drawing));
    return {0, Json{{"cr", cr_total(d)}, {"file", args.emit}}, {}};
}

Result drawing_parity(const DrawingArgs& args) {
    AbstractDrawing d = drawing_from_json(read_json_file(args.drawing));
    Json c = read_json_file(args.cycles);
    if (c.is_object() && c.contains("cycles")) c = c["cycles"];
    if (!c.is_array() || c.size() != 2) throw InputError("cycles file must hold two vertex sequences");
    std::vector<std::vector<Vertex>> cycles;
    for (const auto& cyc : c) {
        if (!cyc.is_array()) throw InputError("each cycle must be an array of vertex ids");
        std::vector<Vertex> vs;
        for (const auto& v : cyc) {
            if (!v.is_number_integer()) throw InputError("cycle entries must be integers");
            vs.push_back(v.get<int>());
        }
        cycles.push_back(vs);
    }
    Parity parity = jordan_parity_screen(d, cycles[0], cycles[1]);
    int crossings = cr_between(d, cycle_edges(d.graph, cycles[0]), cycle_edges(d.graph, cycles[1]));
    Json doc{{"crossings", crossings}, {"parity", to_string(parity)}, {"planar_obstruction", parity == Parity::Odd}};
    return {parity == Parity::Even ? 0 : 1, doc, {}};
}

// --- generate ----------------------------------------------------------------------

Result generate(const GenerateArgs& args) {
    Graph g = graph_from_spec(args.graph);
    std::filesystem::create_directories(args.out_dir);
    auto path = [&](const char* name) { return (std::filesystem::path(args.out_dir) / name).string(); };
    Json files = Json::object();

    write_text_file(path("graph.txt"), format_graph(g));
    files["graph"] = path("graph.txt");
    Json doc{{"graph", args.graph}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};

    if (!args.partition.empty()) {
        VertexPartition p = resolve_partition(args.graph, args.partition);
        p.validate(g);
        write_text_file(path("partition.json"), dump(partition_to_json(p)));
        files["partition"] = path("partition.json");
        doc["parts"] = p.count();
    }
    if (!args.decomposition.empty()) {
        EdgeDecomposition d = resolve_decomposition(args.graph, args.decomposition);
        d.validate(g);
        write_text_file(path("decomposition.json"), dump(decomposition_to_json(d)));
        files["decomposition"] = path("decomposition.json");
        doc["pieces"] = d.count();
    }
    if (!args.drawing.empty()) {
        if (args.drawing != "convex") throw InputError("--drawing supports only convex");
        AbstractDrawing d = convex_drawing(g, natural_order(g));
        write_text_file(path("drawing.json"), dump(drawing_to_json(d, args.graph)));
        files["drawing"] = path("drawing.json");
        doc["cr"] = cr_total(d);
    }
    doc["files"] = files;
    return {0, doc, {}};
}

// --- reproduce ---------------------------------------------------------------------

namespace {

struct Row {
    std::string name;
    std::string expected;
    std::string observed;
    bool holds = false;
    double seconds = 0;
};

std::string render(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "instance                          expected  observed  ok     seconds\n";
    for (const auto& r : rows) {
        std::string name = r.name;
        name.resize(std::max<std::size_t>(name.size(), 32), ' ');
        std::string e = r.expected, o = r.observed;
        e.resize(std::max<std::size_t>(e.size(), 9), ' ');
        o.resize(std::max<std::size_t>(o.size(), 9), ' ');
        os << name << "  " << e << " " << o << " " << (r.holds ? "yes" : "NO ") << "    " << r.seconds << "\n";
    }
    return os.str();
}

}  // namespace

Result reproduce(const ReproduceArgs& args, const BudgetFlags& flags) {
    std::vector<Row> rows;
    Json json_rows = Json::array();
    bool budget_hit = false;
    auto timed = [](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto value = fn();
        return std::make_pair(value, elapsed(start));
    };

    if (args.suite == "t1" || args.suite == "n4") {
        const bool t1 = args.suite == "t1";
        const int lo = args.n_min.value_or(3), hi = args.n_max.value_or(t1 ? 6 : 5);
        if (lo < 3 || hi < lo) throw InputError("need 3 <= n-min <= n-max");
        for (int n = lo; n <= hi; ++n) {
            Budget budget = flags.make();
            auto start = std::chrono::steady_clock::now();
            try {
                auto check = t1 ? check_paired_torus(n, budget) : check_upper_total_torus(n, budget);
                double s = elapsed(start);
                json_rows.push_back(torus_row(check, s));
                rows.push_back({(t1 ? "paired C5xC" : "upper total C4xC") + std::to_string(n),
                                std::to_string(check.expected), std::to_string(check.report.value), check.holds(), s});
            } catch (const BudgetExceeded& e) {
                budget_hit = true;
                double s = elapsed(start);
                json_rows.push_back(Json{{"n", n}, {"budget_exceeded", e.what()}, {"seconds", s}});
                rows.push_back({(t1 ? "paired C5xC" : "upper total C4xC") + std::to_string(n), "-", "budget", false, s});
            }
        }
    } else if (args.suite == "structures") {
        auto add = [&](const std::string& name, bool expected, auto&& fn) {
            auto [observed, s] = timed(fn);
            bool ok = observed == expected;
            json_rows.push_back(Json{{"instance", name}, {"expected", expected}, {"observed", observed}, {"holds", ok},
                                     {"seconds", s}});
            rows.push_back({name, expected ? "true" : "false", observed ? "true" : "false", ok, s});
        };
        for (int m = 2; m <= 4; ++m)
            for (int n = 2; n <= 4; ++n)
                add("stars of K" + std::to_string(m) + "," + std::to_string(n) + " transitive", true, [&] {
                    return is_transitive_decomposition(complete_bipartite(m, n), star_decomposition_bipartite(m, n));
                });
        add("stars of K13 transitive", true,
            [] { return is_transitive_decomposition(complete(13), star_decomposition_complete(13)); });
        add("C(20;1,4) pieces transitive", true,
            [] { return is_transitive_decomposition(circulant(20, {1, 4}), circulant14_decomposition(5)); });
        for (int m = 3; m <= 6; ++m)
            for (int n = 3; n <= 6; ++n)
                add("columns of C" + std::to_string(m) + "xC" + std::to_string(n) + " transitive", true,
                    [&] { return is_transitive_partition(cartesian_cycles(m, n), columns_partition(m, n)); });
        for (int t = 2; t <= 5; ++t) {
            try {
                add("K23 has transitive " + std::to_string(t) + "-partition", false, [&] {
                    Budget budget = flags.make();
                    return find_transitive_partition(complete_bipartite(2, 3), t, budget).has_value();
                });
            } catch (const BudgetExceeded& e) {
                budget_hit = true;
                json_rows.push_back(Json{{"instance", "K23 t=" + std::to_string(t)}, {"budget_exceeded", e.what()}});
            }
        }
    } else {
        throw InputError("--suite must be t1, n4 or structures");
    }

    bool all = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.holds; });
    Json doc{{"suite", args.suite}, {"all_hold", all && !budget_hit}, {"rows", json_rows}};
    return {budget_hit ? 3 : (all ? 0 : 1), doc, render(rows)};
}

}  // namespace prefixcert::cli
