#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace prefixcert {

/// Malformed input, violated precondition, or an out-of-range argument.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran out of its node or time allowance before reaching an answer.
/// Never conflated with "no solution".
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Node and wall-clock allowance for exhaustive searches.
///
/// Each call to tick() charges one node. A search that throws BudgetExceeded
/// has not established anything about the instance.
class Budget {
public:
    static constexpr std::uint64_t kDefaultNodes = 10'000'000;

    Budget() = default;
    explicit Budget(std::uint64_t max_nodes,
                    std::optional<std::chrono::milliseconds> time_limit = std::nullopt)
        : max_nodes_(max_nodes) {
        if (time_limit) deadline_ = std::chrono::steady_clock::now() + *time_limit;
    }

    static Budget unlimited() { return Budget(UINT64_MAX); }

    void tick() {
        if (++nodes_ > max_nodes_)
            throw BudgetExceeded("node budget of " + std::to_string(max_nodes_) + " exceeded");
        if (deadline_ && (nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("time budget exceeded after " + std::to_string(nodes_) + " nodes");
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t max_nodes() const { return max_nodes_; }

private:
    std::uint64_t max_nodes_ = kDefaultNodes;
    std::uint64_t nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace prefixcert
