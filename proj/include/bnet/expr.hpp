#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace bnet {

/**
 * \brief Immutable Boolean expression tree over 0-based variable indices.
 *
 * Nodes are shared, so copies are cheap and values can be passed freely
 * between threads. AND/OR nodes are n-ary.
 */
class BoolExpr {
public:
    enum class Op { Const, Var, Not, And, Or };

    /// Constant false.
    BoolExpr();

    static BoolExpr constant(bool value);
    static BoolExpr var(std::size_t index);
    static BoolExpr negate(BoolExpr e);
    static BoolExpr conj(std::vector<BoolExpr> operands);
    static BoolExpr disj(std::vector<BoolExpr> operands);

    Op op() const noexcept;
    bool value() const noexcept;      // Const only
    std::size_t index() const noexcept;  // Var only
    const std::vector<BoolExpr>& operands() const noexcept;

    bool eval(const std::function<bool(std::size_t)>& assignment) const;
    bool eval(const std::vector<bool>& assignment) const;

    /// Sorted, deduplicated variable indices that occur in the tree.
    std::vector<std::size_t> variables() const;

    /// Largest referenced index plus one (0 for variable-free expressions).
    std::size_t arity_bound() const;

    /// Infix rendering with `!`, `&`, `|` and the minimal parentheses for NOT > AND > OR.
    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const BoolExpr& a, const BoolExpr& b);

private:
    struct Node;
    explicit BoolExpr(std::shared_ptr<const Node> node);
    static BoolExpr nary(Op op, std::vector<BoolExpr> operands);

    std::shared_ptr<const Node> node_;
};

}  // namespace bnet
