#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace prefixcert;
using namespace prefixcert::cli;

namespace {

// Exit codes: 0 found/verified, 1 none/refuted, 2 input error, 3 budget.
constexpr int kInputError = 2;
constexpr int kBudget = 3;

BudgetFlags budget_defaults() {
    BudgetFlags flags;
    if (const char* env = std::getenv("PREFIXCERT_BUDGET_NODES")) {
        try {
            flags.nodes = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring PREFIXCERT_BUDGET_NODES='" << env << "'\n";
        }
    }
    if (const char* env = std::getenv("PREFIXCERT_BUDGET_SECONDS")) {
        try {
            flags.seconds = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring PREFIXCERT_BUDGET_SECONDS='" << env << "'\n";
        }
    }
    return flags;
}

void emit(const Json& doc, bool pretty) { std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n"; }

int fail(const std::string& kind, const std::string& message, int code, bool pretty) {
    std::cerr << "prefixcert: " << message << "\n";
    emit(Json{{"error", kind}, {"message", message}}, pretty);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotation certificates for cyclic sums, domination and crossing bookkeeping"};
    app.set_help_flag("--help", "print help");  // -h is taken by the bound h
    app.require_subcommand(1);
    bool pretty = false;
    BudgetFlags budget = budget_defaults();
    app.add_flag("--pretty", pretty, "indent JSON and print a table on stderr");
    app.add_option("--budget-nodes", budget.nodes, "search node limit (env PREFIXCERT_BUDGET_NODES)");
    app.add_option("--budget-seconds", budget.seconds, "wall-clock limit, 0 for none (env PREFIXCERT_BUDGET_SECONDS)");

    std::function<Result()> action;

    // certify
    CertifyArgs cert;
    auto* certify = app.add_subcommand("certify", "rotation certificates for a cyclic list");
    certify->require_subcommand(1);
    auto* sum = certify->add_subcommand("sum", "find a rotation whose prefixes stay below or above h");
    sum->add_option("--values", cert.values, "comma separated rationals")->required();
    sum->add_option("--h", cert.h, "bound")->required();
    sum->add_option("--dir", cert.direction, "below or above");
    sum->callback([&] { action = [&] { return certify_sum(cert); }; });
    auto* eq = certify->add_subcommand("equality", "pair of rotations pinning total == h");
    eq->add_option("--values", cert.values)->required();
    eq->add_option("--h", cert.h)->required();
    eq->add_option("--epsilon", cert.epsilon);
    eq->callback([&] { action = [&] { return certify_equality(cert); }; });
    auto* verify = certify->add_subcommand("verify", "recheck a certificate file");
    verify->add_option("--values", cert.values)->required();
    verify->add_option("--cert", cert.certificate_file)->required();
    verify->add_option("--h", cert.h, "defaults to the bound stored in the certificate");
    verify->callback([&] { action = [&] { return certify_verify(cert); }; });

    // domination
    DominationArgs dom;
    auto* domination = app.add_subcommand("domination", "exact domination parameters");
    domination->require_subcommand(1);
    auto* solve = domination->add_subcommand("solve", "minimum (or with --upper, maximum minimal) set");
    solve->add_option("--graph", dom.graph)->required();
    solve->add_option("--variant", dom.variant, "dominating, total or paired");
    solve->add_flag("--upper", dom.upper, "largest minimal set instead of the smallest set");
    solve->add_option("--partition", dom.partition, "columns or a partition file, enables prefix pruning");
    solve->add_option("--symmetry", dom.symmetry, "file with {\"sigma\":[...]} for a partition file");
    solve->callback([&] { action = [&] { return domination_solve(dom, budget); }; });
    auto* pair = domination->add_subcommand("verify-pair", "paired domination of C5xCn against its closed form");
    pair->add_option("--n", dom.n)->required();
    pair->callback([&] { action = [&] { return domination_verify_pair(dom, budget); }; });
    auto* upper = domination->add_subcommand("verify-upper-total", "upper total domination of C4xCn against 2n");
    upper->add_option("--n", dom.n)->required();
    upper->callback([&] { action = [&] { return domination_verify_upper_total(dom, budget); }; });
    auto* cor = domination->add_subcommand("corollary", "decide parameter == h by two prefix searches");
    cor->add_option("--graph", dom.graph)->required();
    cor->add_option("--variant", dom.variant);
    cor->add_option("--h", dom.h)->required();
    cor->add_option("--epsilon", dom.epsilon);
    cor->add_option("--partition", dom.partition)->required();
    cor->add_option("--symmetry", dom.symmetry);
    cor->add_option("--extremum", dom.extremum, "min or max");
    cor->add_option("--via", dom.via, "size or redundance");
    cor->callback([&] { action = [&] { return domination_corollary(dom, budget); }; });

    // partition / decomposition
    StructureArgs st;
    auto* partition = app.add_subcommand("partition", "transitive vertex partitions");
    partition->require_subcommand(1);
    auto* pcheck = partition->add_subcommand("check");
    pcheck->add_option("--graph", st.graph)->required();
    pcheck->add_option("--partition", st.partition, "columns or a partition file")->required();
    pcheck->callback([&] { action = [&] { return partition_check(st); }; });
    auto* psearch = partition->add_subcommand("search", "exhaustive search, tiny graphs");
    psearch->add_option("--graph", st.graph)->required();
    psearch->add_option("--t", st.t)->required();
    psearch->callback([&] { action = [&] { return partition_search(st, budget); }; });
    auto* decomposition = app.add_subcommand("decomposition", "transitive edge decompositions");
    decomposition->require_subcommand(1);
    auto* dcheck = decomposition->add_subcommand("check");
    dcheck->add_option("--graph", st.graph)->required();
    dcheck->add_option("--decomposition", st.decomposition, "stars, circulant14 or a file")->required();
    dcheck->callback([&] { action = [&] { return decomposition_check(st); }; });

    // drawing
    DrawingArgs dr;
    auto* drawing = app.add_subcommand("drawing", "crossing bookkeeping on combinatorial drawings");
    drawing->require_subcommand(1);
    auto* dwcheck = drawing->add_subcommand("check", "validate, weigh, and certify a drawing");
    dwcheck->add_option("--drawing", dr.drawing)->required();
    dwcheck->add_option("--graph", dr.graph);
    dwcheck->add_option("--decomposition", dr.decomposition);
    dwcheck->add_option("--h", dr.h);
    dwcheck->add_option("--epsilon", dr.epsilon);
    dwcheck->add_option("--dir", dr.direction);
    dwcheck->callback([&] { action = [&] { return drawing_check(dr); }; });
    auto* convex = drawing->add_subcommand("convex", "vertices on a circle, edges as chords");
    convex->add_option("--graph", dr.graph)->required();
    convex->add_option("--order", dr.order, "natural or a comma separated permutation");
    convex->add_option("--emit", dr.emit, "write the drawing here instead of stdout");
    convex->callback([&] { action = [&] { return drawing_convex(dr); }; });
    auto* parity = drawing->add_subcommand("parity", "crossing parity of two disjoint cycles");
    parity->add_option("--drawing", dr.drawing)->required();
    parity->add_option("--cycles", dr.cycles)->required();
    parity->callback([&] { action = [&] { return drawing_parity(dr); }; });

    // generate
    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "write graph, partition, decomposition and drawing files");
    generate_cmd->add_option("--graph", gen.graph)->required();
    generate_cmd->add_option("--partition", gen.partition, "columns");
    generate_cmd->add_option("--decomposition", gen.decomposition, "stars or circulant14");
    generate_cmd->add_option("--drawing", gen.drawing, "convex");
    generate_cmd->add_option("--out", gen.out_dir, "output directory");
    generate_cmd->callback([&] { action = [&] { return generate(gen); }; });

    // reproduce
    ReproduceArgs rep;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "rerun a table of instances");
    reproduce_cmd->add_option("--suite", rep.suite, "t1, n4 or structures")->required();
    reproduce_cmd->add_option("--n-min", rep.n_min);
    reproduce_cmd->add_option("--n-max", rep.n_max);
    reproduce_cmd->callback([&] { action = [&] { return reproduce(rep, budget); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), kInputError, pretty);
    }

    try {
        Result result = action();
        emit(result.doc, pretty);
        if (pretty && !result.table.empty()) std::cerr << result.table;
        return result.exit_code;
    } catch (const BudgetExceeded& e) {
        return fail("budget", e.what(), kBudget, pretty);
    } catch (const InputError& e) {
        return fail("input", e.what(), kInputError, pretty);
    } catch (const std::exception& e) {
        return fail("input", e.what(), kInputError, pretty);
    }
}
