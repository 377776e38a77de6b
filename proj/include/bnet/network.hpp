#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnet/expr.hpp"

namespace bnet {

/// Semantic support is only computed up to this many syntactic variables.
inline constexpr std::size_t kMaxTabulatedInputs = 24;

/// How "f_i depends on x_j" is decided.
enum class SupportMode { Semantic, Syntactic };

/**
 * \brief An update function reduced to its true inputs and a lookup table.
 *
 * Entry `table[m]` is the function value when input `inputs[j]` takes bit j of m.
 * When the function has too many syntactic variables to tabulate, `table` is
 * null, `inputs` is the syntactic variable set and callers evaluate `expr`.
 */
struct CompiledFunction {
    BoolExpr expr;
    std::vector<std::size_t> inputs;
    std::shared_ptr<const std::vector<std::uint8_t>> table;

    bool tabulated() const noexcept { return table != nullptr; }
};

/// Indices j such that flipping x_j changes the value of `expr` for some assignment.
std::vector<std::size_t> support(const BoolExpr& expr, std::size_t n);

class BooleanNetwork {
public:
    BooleanNetwork(std::vector<std::string> names, std::vector<BoolExpr> functions);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const BoolExpr& function(std::size_t i) const { return functions_.at(i); }
    const std::vector<BoolExpr>& functions() const noexcept { return functions_; }
    const CompiledFunction& compiled(std::size_t i) const { return compiled_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Functions that were too wide for semantic support (reported once by callers).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    friend bool operator==(const BooleanNetwork& a, const BooleanNetwork& b) {
        return a.names_ == b.names_ && a.functions_ == b.functions_;
    }

private:
    std::vector<std::string> names_;
    std::vector<BoolExpr> functions_;
    std::vector<CompiledFunction> compiled_;
    std::vector<std::string> warnings_;
};

/// The `name, expression` text form, one line per variable.
std::string to_text(const BooleanNetwork& bn);

/// Directed graph with an edge j -> i whenever f_i depends on x_j.
struct DepGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> parents;   // parents[i]: sorted j with j -> i
    std::vector<std::vector<std::size_t>> children;  // children[j]: sorted i with j -> i

    bool has_edge(std::size_t from, std::size_t to) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;
};

DepGraph dependency_graph(const BooleanNetwork& bn, SupportMode mode = SupportMode::Semantic);

/// Deterministic random network: each variable gets 1..k distinct regulators and a random truth table.
BooleanNetwork random_network(std::size_t n, std::size_t k, std::uint64_t seed);

/// Unbiased draw from [0, bound) on a standard engine; stable across platforms.
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = static_cast<std::uint64_t>(rng());
    } while (x >= limit);
    return x % bound;
}

}  // namespace bnet
