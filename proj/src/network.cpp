#include "bnet/network.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_set>

#include "bnet/error.hpp"

namespace bnet {

namespace {

std::vector<std::uint8_t> tabulate(const BoolExpr& expr, const std::vector<std::size_t>& vars) {
    std::vector<std::uint8_t> table(std::size_t{1} << vars.size());
    for (std::size_t m = 0; m < table.size(); ++m) {
        table[m] = expr.eval([&](std::size_t idx) {
            auto it = std::lower_bound(vars.begin(), vars.end(), idx);
            return ((m >> static_cast<std::size_t>(it - vars.begin())) & 1U) != 0;
        });
    }
    return table;
}

/// Positions j (into `table`'s inputs) whose flip changes some entry.
std::vector<std::size_t> relevant_positions(const std::vector<std::uint8_t>& table, std::size_t width) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < width; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t m = 0; m < table.size(); ++m) {
            if ((m & bit) == 0 && table[m] != table[m | bit]) {
                out.push_back(j);
                break;
            }
        }
    }
    return out;
}

CompiledFunction compile(const BoolExpr& expr, bool& too_wide) {
    CompiledFunction cf;
    cf.expr = expr;
    auto vars = expr.variables();
    too_wide = vars.size() > kMaxTabulatedInputs;
    if (too_wide) {
        cf.inputs = std::move(vars);
        return cf;
    }
    auto full = tabulate(expr, vars);
    auto keep = relevant_positions(full, vars.size());
    std::vector<std::uint8_t> reduced(std::size_t{1} << keep.size());
    for (std::size_t m = 0; m < reduced.size(); ++m) {
        std::size_t src = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if ((m >> j) & 1U) src |= std::size_t{1} << keep[j];
        reduced[m] = full[src];
    }
    for (std::size_t j : keep) cf.inputs.push_back(vars[j]);
    cf.table = std::make_shared<const std::vector<std::uint8_t>>(std::move(reduced));
    return cf;
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

}  // namespace

std::vector<std::size_t> support(const BoolExpr& expr, std::size_t n) {
    auto vars = expr.variables();
    if (!vars.empty() && vars.back() >= n)
        throw InvalidArgument("expression references variable " + std::to_string(vars.back() + 1) +
                              " outside 1.." + std::to_string(n));
    if (vars.size() > kMaxTabulatedInputs) return vars;
    auto table = tabulate(expr, vars);
    std::vector<std::size_t> out;
    for (std::size_t j : relevant_positions(table, vars.size())) out.push_back(vars[j]);
    return out;
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<BoolExpr> functions)
    : names_(std::move(names)), functions_(std::move(functions)) {
    if (names_.empty()) throw InvalidArgument("a Boolean network needs at least one variable");
    if (names_.size() != functions_.size())
        throw InvalidArgument("expected one update function per variable");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_identifier(name)) throw InvalidArgument("invalid variable name '" + name + "'");
        if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name '" + name + "'");
    }
    compiled_.reserve(functions_.size());
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        if (functions_[i].arity_bound() > names_.size())
            throw InvalidArgument("update function of '" + names_[i] + "' references an unknown variable");
        bool too_wide = false;
        compiled_.push_back(compile(functions_[i], too_wide));
        if (too_wide)
            warnings_.push_back("update function of '" + names_[i] + "' has more than " +
                                std::to_string(kMaxTabulatedInputs) +
                                " variables; using syntactic support");
    }
}

std::optional<std::size_t> BooleanNetwork::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::string to_text(const BooleanNetwork& bn) {
    std::string out;
    for (std::size_t i = 0; i < bn.size(); ++i) {
        out += bn.name(i);
        out += ", ";
        out += bn.function(i).to_string(bn.names());
        out += '\n';
    }
    return out;
}

bool DepGraph::has_edge(std::size_t from, std::size_t to) const {
    const auto& p = parents.at(to);
    return std::binary_search(p.begin(), p.end(), from);
}

std::vector<std::pair<std::size_t, std::size_t>> DepGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i : children[j]) out.emplace_back(j, i);
    return out;
}

std::size_t DepGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& p : parents) c += p.size();
    return c;
}

DepGraph dependency_graph(const BooleanNetwork& bn, SupportMode mode) {
    DepGraph g;
    g.n = bn.size();
    g.parents.resize(g.n);
    g.children.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        g.parents[i] = mode == SupportMode::Semantic ? bn.compiled(i).inputs : bn.function(i).variables();
        for (std::size_t j : g.parents[i]) g.children[j].push_back(i);
    }
    return g;
}

BooleanNetwork random_network(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0 || k > n)
        throw InvalidArgument("random_network needs n >= 1 and 1 <= k <= n");
    if (k > 16) throw InvalidArgument("random_network supports in-degree at most 16");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names;
    std::vector<BoolExpr> funcs;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t degree = 1 + uniform_below(rng, k);
        // Partial Fisher-Yates over 0..n-1.
        std::vector<std::size_t> pool(n);
        for (std::size_t j = 0; j < n; ++j) pool[j] = j;
        for (std::size_t j = 0; j < degree; ++j) std::swap(pool[j], pool[j + uniform_below(rng, n - j)]);
        std::vector<std::size_t> regs(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degree));
        std::sort(regs.begin(), regs.end());

        std::vector<BoolExpr> minterms;
        const std::size_t rows = std::size_t{1} << degree;
        for (std::size_t m = 0; m < rows; ++m) {
            if ((rng() & 1U) == 0) continue;
            std::vector<BoolExpr> lits;
            for (std::size_t j = 0; j < degree; ++j) {
                auto v = BoolExpr::var(regs[j]);
                lits.push_back(((m >> j) & 1U) ? v : BoolExpr::negate(v));
            }
            minterms.push_back(BoolExpr::conj(std::move(lits)));
        }
        if (minterms.size() == rows)
            funcs.push_back(BoolExpr::constant(true));
        else
            funcs.push_back(BoolExpr::disj(std::move(minterms)));
    }
    return BooleanNetwork(std::move(names), std::move(funcs));
}

}  // namespace bnet
