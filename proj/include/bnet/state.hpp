#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnet {

/// A state over a scope packed into an integer. Scope position 0 is the most
/// significant bit, so numeric order equals lexicographic bit-string order.
using Code = std::uint64_t;

/// Sorted set of distinct 0-based variable indices.
class Scope {
public:
    static constexpr std::size_t kMaxSize = 64;

    Scope() = default;
    explicit Scope(std::vector<std::size_t> vars);
    static Scope full(std::size_t n);

    std::size_t size() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    const std::vector<std::size_t>& vars() const noexcept { return vars_; }
    std::size_t operator[](std::size_t pos) const { return vars_[pos]; }
    auto begin() const noexcept { return vars_.begin(); }
    auto end() const noexcept { return vars_.end(); }

    std::optional<std::size_t> position_of(std::size_t var) const;
    bool contains(std::size_t var) const { return position_of(var).has_value(); }
    bool is_subset_of(const Scope& other) const;

    Scope unite(const Scope& other) const;
    Scope intersect(const Scope& other) const;
    Scope minus(const Scope& other) const;

    friend bool operator==(const Scope&, const Scope&) = default;

private:
    std::vector<std::size_t> vars_;
};

/// Bit of scope position `pos` in a code over a scope of size `width`.
inline bool code_bit(Code c, std::size_t width, std::size_t pos) noexcept {
    return ((c >> (width - 1 - pos)) & 1U) != 0;
}

inline Code code_mask(std::size_t width, std::size_t pos) noexcept { return Code{1} << (width - 1 - pos); }

std::string code_to_string(Code c, std::size_t width);
Code code_from_string(std::string_view bits);

struct State {
    Scope scope;
    Code code = 0;

    bool bit(std::size_t pos) const { return code_bit(code, scope.size(), pos); }
    std::string to_string() const { return code_to_string(code, scope.size()); }
    static State parse(Scope scope, std::string_view bits);

    friend bool operator==(const State&, const State&) = default;
};

/**
 * \brief A set of states over one scope.
 *
 * Dense bitmap when the scope has at most kDenseLimit variables, sorted code
 * list otherwise. The representation depends only on the scope, so two sets
 * over the same scope always share it. Mixing scopes in a binary operation
 * throws InvalidArgument.
 */
class StateSet {
public:
    static constexpr std::size_t kDenseLimit = 30;

    StateSet() = default;
    explicit StateSet(Scope scope);

    static StateSet full(Scope scope);
    static StateSet of(Scope scope, std::vector<Code> codes);
    static StateSet from_strings(Scope scope, const std::vector<std::string>& bits);

    const Scope& scope() const noexcept { return scope_; }
    std::size_t width() const noexcept { return scope_.size(); }
    bool dense() const noexcept { return dense_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Code c) const;
    bool contains(const State& s) const;
    /// Returns true if the state was not yet present.
    bool insert(Code c);
    bool erase(Code c);

    template <class Fn>
    void for_each(Fn&& fn) const {
        if (dense_) {
            for (std::size_t w = 0; w < words_.size(); ++w) {
                std::uint64_t word = words_[w];
                while (word) {
                    unsigned b = static_cast<unsigned>(std::countr_zero(word));
                    fn(static_cast<Code>(w * 64 + b));
                    word &= word - 1;
                }
            }
        } else {
            for (Code c : codes_) fn(c);
        }
    }

    std::vector<Code> codes() const;
    std::vector<std::string> to_strings() const;
    std::optional<Code> min() const;

    StateSet unite(const StateSet& other) const;
    StateSet subtract(const StateSet& other) const;
    StateSet intersect(const StateSet& other) const;
    bool is_subset_of(const StateSet& other) const;
    bool intersects(const StateSet& other) const;

    friend bool operator==(const StateSet& a, const StateSet& b);

private:
    void require_same_scope(const StateSet& other, const char* op) const;
    void recount();

    Scope scope_;
    bool dense_ = true;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;  // dense
    std::vector<Code> codes_;           // sparse, sorted
};

std::size_t hamming(const State& a, const State& b);

struct HdResult {
    std::size_t distance = 0;
    /// Every set of variable indices (0-based, ascending) whose flip lands in the target set; sorted.
    std::vector<std::vector<std::size_t>> index_sets;
};

/// Minimum Hamming distance from `s` to `target` and all index sets realising it.
HdResult hd_argmin(const State& s, const StateSet& target);

State project_state(const State& s, const Scope& onto);
StateSet project(const StateSet& set, const Scope& onto);

/// Joins of all pairs that agree on the shared variables; scope is the union.
StateSet cross(const StateSet& a, const StateSet& b);

/// Moves bits between two scopes: for each destination position, the source position it copies.
class BitGather {
public:
    BitGather(const Scope& from, const Scope& to);
    Code operator()(Code src) const noexcept {
        Code out = 0;
        for (const auto& [src_shift, dst_shift] : moves_) out |= ((src >> src_shift) & 1U) << dst_shift;
        return out;
    }

private:
    std::vector<std::pair<unsigned, unsigned>> moves_;
};

}  // namespace bnet
