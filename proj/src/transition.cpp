#include "bnet/transition.hpp"

#include <algorithm>
#include <deque>

#include "bnet/error.hpp"

namespace bnet {

void Limits::check_scope(std::size_t width) const {
    if (width > scope_cap)
        throw CapExceeded("state space too large: scope of " + std::to_string(width) +
                          " variables exceeds the cap of " + std::to_string(scope_cap));
}

void Limits::check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw Timeout("computation timed out");
}

LocalTS::LocalTS(const BooleanNetwork& bn, StateSet admissible, const Limits& limits)
    : admissible_(std::move(admissible)), limits_(limits) {
    limits_.check_scope(width());
    const Scope& sc = scope();
    if (!sc.empty() && sc.vars().back() >= bn.size()) throw InvalidArgument("scope references unknown variables");
    updates_.reserve(width());
    for (std::size_t pos = 0; pos < width(); ++pos) {
        const CompiledFunction& cf = bn.compiled(sc[pos]);
        Update u;
        for (std::size_t input : cf.inputs) {
            auto q = sc.position_of(input);
            if (!q)
                throw InvalidArgument("update function of '" + bn.name(sc[pos]) + "' reads '" + bn.name(input) +
                                      "', which is outside the transition system's scope");
            const auto shift = static_cast<unsigned>(width() - 1 - *q);
            u.shifts.push_back(shift);
            u.var_shift.emplace_back(input, shift);
        }
        u.table = cf.table;
        if (!cf.tabulated()) u.expr = cf.expr;
        updates_.push_back(std::move(u));
    }
}

bool LocalTS::update_value(std::size_t pos, Code s) const {
    const Update& u = updates_[pos];
    if (u.table) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < u.shifts.size(); ++j) idx |= static_cast<std::size_t>((s >> u.shifts[j]) & 1U) << j;
        return (*u.table)[idx] != 0;
    }
    return u.expr.eval([&](std::size_t var) {
        for (const auto& [v, shift] : u.var_shift)
            if (v == var) return ((s >> shift) & 1U) != 0;
        return false;
    });
}

bool LocalTS::has_self_loop(Code s) const {
    for (std::size_t pos = 0; pos < width(); ++pos)
        if (update_value(pos, s) == code_bit(s, width(), pos)) return true;
    return false;
}

void LocalTS::require_member(const State& s, const char* op) const {
    if (s.scope != scope()) throw InvalidArgument(std::string(op) + ": state has a different scope");
    if (!admissible_.contains(s.code))
        throw InvalidArgument(std::string(op) + ": state " + s.to_string() + " is not in the transition system");
}

void LocalTS::require_subset(const StateSet& set, const char* op) const {
    if (set.scope() != scope()) throw InvalidArgument(std::string(op) + ": set has a different scope");
    if (!set.is_subset_of(admissible_))
        throw InvalidArgument(std::string(op) + ": set is not contained in the transition system");
}

StateSet LocalTS::post_one(const State& s) const {
    require_member(s, "post");
    StateSet out(scope());
    if (has_self_loop(s.code)) out.insert(s.code);
    for_each_successor(s.code, [&](Code t) { out.insert(t); });
    return out;
}

StateSet LocalTS::post_set(const StateSet& set) const {
    require_subset(set, "post");
    StateSet out(scope());
    set.for_each([&](Code s) {
        if (has_self_loop(s)) out.insert(s);
        for_each_successor(s, [&](Code t) { out.insert(t); });
    });
    return out;
}

StateSet LocalTS::pre_set(const StateSet& set) const {
    if (set.scope() != scope()) throw InvalidArgument("pre: set has a different scope");
    StateSet out(scope());
    set.for_each([&](Code t) {
        if (!admissible_.contains(t)) return;
        if (has_self_loop(t)) out.insert(t);
        for_each_predecessor(t, [&](Code s) { out.insert(s); });
    });
    return out;
}

StateSet LocalTS::reach(const State& s) const {
    require_member(s, "reach");
    StateSet seed(scope());
    seed.insert(s.code);
    return reach_set(seed);
}

StateSet LocalTS::reach_set(const StateSet& seed) const {
    require_subset(seed, "reach");
    StateSet seen = seed;
    std::vector<Code> frontier = seed.codes();
    std::size_t tick = 0;
    while (!frontier.empty()) {
        const Code s = frontier.back();
        frontier.pop_back();
        if ((++tick & 0xFFFF) == 0) limits_.check_deadline();
        for_each_successor(s, [&](Code t) {
            if (seen.insert(t)) frontier.push_back(t);
        });
    }
    return seen;
}

StateSet LocalTS::back_reach_set(const StateSet& seed) const {
    require_subset(seed, "backward reach");
    StateSet seen = seed;
    std::vector<Code> frontier = seed.codes();
    std::size_t tick = 0;
    while (!frontier.empty()) {
        const Code t = frontier.back();
        frontier.pop_back();
        if ((++tick & 0xFFFF) == 0) limits_.check_deadline();
        for_each_predecessor(t, [&](Code s) {
            if (seen.insert(s)) frontier.push_back(s);
        });
    }
    return seen;
}

}  // namespace bnet
