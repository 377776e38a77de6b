#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bnet/network.hpp"
#include "bnet/state.hpp"

namespace bnet {

/// Resource bounds shared by every state-space computation.
struct Limits {
    static constexpr std::size_t kDefaultScopeCap = 26;

    std::size_t scope_cap = kDefaultScopeCap;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_scope(std::size_t width) const;
    void check_deadline() const;
};

/**
 * \brief Asynchronous transition system over a variable scope.
 *
 * States are the members of `admissible`; s -> s' iff hd(s, s') <= 1 and some
 * f_i (i in the scope) satisfies s'[i] = f_i(s). A state has a self-loop iff
 * at least one update leaves it unchanged. Transitions leaving `admissible`
 * are dropped.
 *
 * The scope must be closed under the update functions it drives: every input
 * of f_i for i in the scope lies in the scope.
 */
class LocalTS {
public:
    LocalTS(const BooleanNetwork& bn, StateSet admissible, const Limits& limits = {});

    const Scope& scope() const noexcept { return admissible_.scope(); }
    const StateSet& admissible() const noexcept { return admissible_; }
    std::size_t width() const noexcept { return admissible_.width(); }
    const Limits& limits() const noexcept { return limits_; }
    const std::vector<std::size_t>& update_indices() const noexcept { return admissible_.scope().vars(); }

    /// f_{scope[pos]} evaluated at `s`.
    bool update_value(std::size_t pos, Code s) const;
    bool has_self_loop(Code s) const;

    /// Calls fn(s') for each admissible s' != s with s -> s'.
    template <class Fn>
    void for_each_successor(Code s, Fn&& fn) const {
        for (std::size_t pos = 0; pos < width(); ++pos) {
            const Code m = code_mask(width(), pos);
            if (update_value(pos, s) != ((s & m) != 0)) {
                const Code t = s ^ m;
                if (admissible_.contains(t)) fn(t);
            }
        }
    }

    /// Calls fn(s) for each admissible s != t with s -> t.
    template <class Fn>
    void for_each_predecessor(Code t, Fn&& fn) const {
        for (std::size_t pos = 0; pos < width(); ++pos) {
            const Code m = code_mask(width(), pos);
            const Code s = t ^ m;
            if (admissible_.contains(s) && update_value(pos, s) == ((t & m) != 0)) fn(s);
        }
    }

    State state(Code c) const { return State{scope(), c}; }

    StateSet post_one(const State& s) const;
    StateSet post_set(const StateSet& set) const;
    StateSet pre_set(const StateSet& set) const;
    StateSet reach(const State& s) const;
    /// Forward closure of a set (least fixpoint of post seeded with it).
    StateSet reach_set(const StateSet& seed) const;
    /// States with a path into `seed`.
    StateSet back_reach_set(const StateSet& seed) const;

private:
    struct Update {
        std::vector<unsigned> shifts;  // per input: shift of its bit in a local code
        std::shared_ptr<const std::vector<std::uint8_t>> table;
        BoolExpr expr;                               // untabulated fallback
        std::vector<std::pair<std::size_t, unsigned>> var_shift;  // fallback: var -> shift
    };

    void require_member(const State& s, const char* op) const;
    void require_subset(const StateSet& set, const char* op) const;

    StateSet admissible_;
    Limits limits_;
    std::vector<Update> updates_;
};

}  // namespace bnet
