#include "bnet/expr.hpp"

#include <algorithm>

namespace bnet {

struct BoolExpr::Node {
    Op op = Op::Const;
    bool value = false;
    std::size_t index = 0;
    std::vector<BoolExpr> operands;
};

BoolExpr::BoolExpr() : BoolExpr(constant(false)) {}

BoolExpr::BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

BoolExpr BoolExpr::constant(bool value) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = value;
    return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::var(std::size_t index) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->index = index;
    return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::negate(BoolExpr e) {
    auto n = std::make_shared<Node>();
    n->op = Op::Not;
    n->operands.push_back(std::move(e));
    return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::nary(Op op, std::vector<BoolExpr> operands) {
    if (operands.size() == 1) return std::move(operands.front());
    auto n = std::make_shared<Node>();
    n->op = op;
    n->operands = std::move(operands);
    return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::conj(std::vector<BoolExpr> operands) {
    if (operands.empty()) return constant(true);
    return nary(Op::And, std::move(operands));
}

BoolExpr BoolExpr::disj(std::vector<BoolExpr> operands) {
    if (operands.empty()) return constant(false);
    return nary(Op::Or, std::move(operands));
}

BoolExpr::Op BoolExpr::op() const noexcept { return node_->op; }
bool BoolExpr::value() const noexcept { return node_->value; }
std::size_t BoolExpr::index() const noexcept { return node_->index; }
const std::vector<BoolExpr>& BoolExpr::operands() const noexcept { return node_->operands; }

bool BoolExpr::eval(const std::function<bool(std::size_t)>& assignment) const {
    switch (node_->op) {
    case Op::Const:
        return node_->value;
    case Op::Var:
        return assignment(node_->index);
    case Op::Not:
        return !node_->operands.front().eval(assignment);
    case Op::And:
        return std::all_of(node_->operands.begin(), node_->operands.end(),
                           [&](const BoolExpr& e) { return e.eval(assignment); });
    case Op::Or:
        return std::any_of(node_->operands.begin(), node_->operands.end(),
                           [&](const BoolExpr& e) { return e.eval(assignment); });
    }
    return false;
}

bool BoolExpr::eval(const std::vector<bool>& assignment) const {
    return eval([&](std::size_t i) { return static_cast<bool>(assignment.at(i)); });
}

namespace {

void collect(const BoolExpr& e, std::vector<std::size_t>& out) {
    if (e.op() == BoolExpr::Op::Var) {
        out.push_back(e.index());
        return;
    }
    for (const auto& c : e.operands()) collect(c, out);
}

int precedence(BoolExpr::Op op) {
    switch (op) {
    case BoolExpr::Op::Or:
        return 1;
    case BoolExpr::Op::And:
        return 2;
    default:
        return 3;
    }
}

void render(const BoolExpr& e, const std::vector<std::string>& names, std::string& out) {
    auto child = [&](const BoolExpr& c, int parent_prec) {
        bool paren = precedence(c.op()) < parent_prec;
        if (paren) out += '(';
        render(c, names, out);
        if (paren) out += ')';
    };
    switch (e.op()) {
    case BoolExpr::Op::Const:
        out += e.value() ? '1' : '0';
        break;
    case BoolExpr::Op::Var:
        out += e.index() < names.size() ? names[e.index()] : "x" + std::to_string(e.index() + 1);
        break;
    case BoolExpr::Op::Not:
        out += '!';
        child(e.operands().front(), 3);
        break;
    case BoolExpr::Op::And:
    case BoolExpr::Op::Or: {
        const char* sep = e.op() == BoolExpr::Op::And ? " & " : " | ";
        // Equal-precedence children are parenthesized to keep the n-ary shape on re-parse.
        int prec = precedence(e.op()) + 1;
        for (std::size_t i = 0; i < e.operands().size(); ++i) {
            if (i) out += sep;
            child(e.operands()[i], prec);
        }
        break;
    }
    }
}

}  // namespace

std::vector<std::size_t> BoolExpr::variables() const {
    std::vector<std::size_t> out;
    collect(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t BoolExpr::arity_bound() const {
    auto vars = variables();
    return vars.empty() ? 0 : vars.back() + 1;
}

std::string BoolExpr::to_string(const std::vector<std::string>& names) const {
    std::string out;
    render(*this, names, out);
    return out;
}

bool operator==(const BoolExpr& a, const BoolExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
    case BoolExpr::Op::Const:
        return a.value() == b.value();
    case BoolExpr::Op::Var:
        return a.index() == b.index();
    default:
        return a.operands() == b.operands();
    }
}

}  // namespace bnet
