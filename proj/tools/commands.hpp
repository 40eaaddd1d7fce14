#pragma once

#include "prefixcert/errors.hpp"
#include "prefixcert/formats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prefixcert::cli {

// What a command hands back to main: the exit status, the single JSON
// document for stdout, and an optional plain table for --pretty.
struct Result {
    int exit_code = 0;
    Json doc;
    std::string table;
};

struct BudgetFlags {
    std::uint64_t nodes = Budget::kDefaultNodes;
    double seconds = 60;

    Budget make() const;
};

struct CertifyArgs {
    std::string values;
    std::string h;
    std::string direction = "below";
    std::string epsilon = "1/2";
    std::string certificate_file;
};

Result certify_sum(const CertifyArgs& args);
Result certify_equality(const CertifyArgs& args);
Result certify_verify(const CertifyArgs& args);

struct DominationArgs {
    std::string graph;
    std::string variant = "dominating";
    bool upper = false;
    std::string partition;  // "columns", a JSON file, or empty
    std::string symmetry;   // JSON file with "sigma"; columns supplies its own
    int h = 0;
    std::string epsilon = "1/2";
    std::string extremum = "min";
    std::string via = "size";
    int n = 0;
};

Result domination_solve(const DominationArgs& args, const BudgetFlags& budget);
Result domination_verify_pair(const DominationArgs& args, const BudgetFlags& budget);
Result domination_verify_upper_total(const DominationArgs& args, const BudgetFlags& budget);
Result domination_corollary(const DominationArgs& args, const BudgetFlags& budget);

struct StructureArgs {
    std::string graph;
    std::string partition;
    std::string decomposition;
    int t = 0;
};

Result partition_check(const StructureArgs& args);
Result partition_search(const StructureArgs& args, const BudgetFlags& budget);
Result decomposition_check(const StructureArgs& args);

struct DrawingArgs {
    std::string graph;
    std::string drawing;
    std::string decomposition;
    std::string order = "natural";
    std::string emit;
    std::string cycles;
    std::int64_t h = 0;
    std::string epsilon = "1/2";
    std::string direction = "below";
};

Result drawing_check(const DrawingArgs& args);
Result drawing_convex(const DrawingArgs& args);
Result drawing_parity(const DrawingArgs& args);

struct GenerateArgs {
    std::string graph;
    std::string partition;
    std::string decomposition;
    std::string drawing;
    std::string out_dir = ".";
};

Result generate(const GenerateArgs& args);

struct ReproduceArgs {
    std::string suite;
    std::optional<int> n_min;
    std::optional<int> n_max;
};

Result reproduce(const ReproduceArgs& args, const BudgetFlags& budget);

}  // namespace prefixcert::cli
