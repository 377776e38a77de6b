#include "bnet/state.hpp"

#include <algorithm>
#include <unordered_map>

#include "bnet/error.hpp"

namespace bnet {

Scope::Scope(std::vector<std::size_t> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw InvalidArgument("scope variables must be distinct");
    if (vars_.size() > kMaxSize)
        throw CapExceeded("scope of " + std::to_string(vars_.size()) + " variables exceeds the " +
                          std::to_string(kMaxSize) + "-variable state encoding");
}

Scope Scope::full(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return Scope(std::move(v));
}

std::optional<std::size_t> Scope::position_of(std::size_t var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Scope::is_subset_of(const Scope& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

Scope Scope::unite(const Scope& other) const {
    std::vector<std::size_t> out;
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(out));
    return Scope(std::move(out));
}

Scope Scope::intersect(const Scope& other) const {
    std::vector<std::size_t> out;
    std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                          std::back_inserter(out));
    return Scope(std::move(out));
}

Scope Scope::minus(const Scope& other) const {
    std::vector<std::size_t> out;
    std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(out));
    return Scope(std::move(out));
}

std::string code_to_string(Code c, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t p = 0; p < width; ++p)
        if (code_bit(c, width, p)) s[p] = '1';
    return s;
}

Code code_from_string(std::string_view bits) {
    if (bits.size() > Scope::kMaxSize) throw InvalidArgument("bit string longer than 64 characters");
    Code c = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw InvalidArgument("bit string may only contain 0 and 1");
        c = (c << 1) | static_cast<Code>(ch == '1');
    }
    return c;
}

State State::parse(Scope scope, std::string_view bits) {
    if (bits.size() != scope.size())
        throw InvalidArgument("bit string '" + std::string(bits) + "' has " + std::to_string(bits.size()) +
                              " bits, expected " + std::to_string(scope.size()));
    Code c = code_from_string(bits);
    return State{std::move(scope), c};
}

// ---------------------------------------------------------------------------

StateSet::StateSet(Scope scope) : scope_(std::move(scope)), dense_(scope_.size() <= kDenseLimit) {
    if (dense_) words_.assign(std::max<std::size_t>(1, (std::size_t{1} << scope_.size()) / 64), 0);
}

StateSet StateSet::full(Scope scope) {
    StateSet s(std::move(scope));
    if (!s.dense_) throw CapExceeded("cannot materialise the full state space of a scope over 30 variables");
    const std::size_t universe = std::size_t{1} << s.width();
    if (universe >= 64) {
        std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    } else {
        s.words_[0] = (std::uint64_t{1} << universe) - 1;
    }
    s.count_ = universe;
    return s;
}

StateSet StateSet::of(Scope scope, std::vector<Code> codes) {
    StateSet s(std::move(scope));
    if (s.dense_) {
        for (Code c : codes) s.insert(c);
    } else {
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        if (s.width() < 64 && !codes.empty() && codes.back() >> s.width())
            throw InvalidArgument("state code outside its scope");
        s.codes_ = std::move(codes);
        s.count_ = s.codes_.size();
    }
    return s;
}

StateSet StateSet::from_strings(Scope scope, const std::vector<std::string>& bits) {
    std::vector<Code> codes;
    codes.reserve(bits.size());
    for (const auto& b : bits) codes.push_back(State::parse(scope, b).code);
    return of(std::move(scope), std::move(codes));
}

bool StateSet::contains(Code c) const {
    if (dense_) {
        if (c >= (Code{1} << width())) return false;
        return (words_[c / 64] >> (c % 64)) & 1U;
    }
    return std::binary_search(codes_.begin(), codes_.end(), c);
}

bool StateSet::contains(const State& s) const {
    if (s.scope != scope_) throw InvalidArgument("state and set have different scopes");
    return contains(s.code);
}

bool StateSet::insert(Code c) {
    if (dense_) {
        if (c >= (Code{1} << width())) throw InvalidArgument("state code outside its scope");
        std::uint64_t& w = words_[c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (w & bit) return false;
        w |= bit;
        ++count_;
        return true;
    }
    auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
    if (it != codes_.end() && *it == c) return false;
    codes_.insert(it, c);
    ++count_;
    return true;
}

bool StateSet::erase(Code c) {
    if (dense_) {
        if (c >= (Code{1} << width())) return false;
        std::uint64_t& w = words_[c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (!(w & bit)) return false;
        w &= ~bit;
        --count_;
        return true;
    }
    auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
    if (it == codes_.end() || *it != c) return false;
    codes_.erase(it);
    --count_;
    return true;
}

std::vector<Code> StateSet::codes() const {
    if (!dense_) return codes_;
    std::vector<Code> out;
    out.reserve(count_);
    for_each([&](Code c) { out.push_back(c); });
    return out;
}

std::vector<std::string> StateSet::to_strings() const {
    std::vector<std::string> out;
    out.reserve(count_);
    for_each([&](Code c) { out.push_back(code_to_string(c, width())); });
    return out;
}

std::optional<Code> StateSet::min() const {
    if (count_ == 0) return std::nullopt;
    if (!dense_) return codes_.front();
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Code>(w * 64 + static_cast<unsigned>(std::countr_zero(words_[w])));
    return std::nullopt;
}

void StateSet::require_same_scope(const StateSet& other, const char* op) const {
    if (scope_ != other.scope_) throw InvalidArgument(std::string(op) + ": state sets have different scopes");
}

void StateSet::recount() {
    if (!dense_) {
        count_ = codes_.size();
        return;
    }
    count_ = 0;
    for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

StateSet StateSet::unite(const StateSet& other) const {
    require_same_scope(other, "union");
    StateSet out(*this);
    if (dense_) {
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    } else {
        out.codes_.clear();
        std::set_union(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                       std::back_inserter(out.codes_));
    }
    out.recount();
    return out;
}

StateSet StateSet::subtract(const StateSet& other) const {
    require_same_scope(other, "difference");
    StateSet out(*this);
    if (dense_) {
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    } else {
        out.codes_.clear();
        std::set_difference(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                            std::back_inserter(out.codes_));
    }
    out.recount();
    return out;
}

StateSet StateSet::intersect(const StateSet& other) const {
    require_same_scope(other, "intersection");
    StateSet out(*this);
    if (dense_) {
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    } else {
        out.codes_.clear();
        std::set_intersection(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                              std::back_inserter(out.codes_));
    }
    out.recount();
    return out;
}

bool StateSet::is_subset_of(const StateSet& other) const {
    require_same_scope(other, "subset");
    if (dense_) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
}

bool StateSet::intersects(const StateSet& other) const {
    require_same_scope(other, "intersects");
    if (dense_) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    auto a = codes_.begin();
    auto b = other.codes_.begin();
    while (a != codes_.end() && b != other.codes_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

bool operator==(const StateSet& a, const StateSet& b) {
    return a.scope_ == b.scope_ && a.count_ == b.count_ && a.words_ == b.words_ && a.codes_ == b.codes_;
}

// ---------------------------------------------------------------------------

std::size_t hamming(const State& a, const State& b) {
    if (a.scope != b.scope) throw InvalidArgument("hamming: states have different scopes");
    return static_cast<std::size_t>(std::popcount(a.code ^ b.code));
}

HdResult hd_argmin(const State& s, const StateSet& target) {
    if (s.scope != target.scope()) throw InvalidArgument("hd_argmin: state and set have different scopes");
    if (target.empty()) throw InvalidArgument("hd_argmin: target set is empty");
    HdResult r;
    r.distance = s.scope.size() + 1;
    std::vector<Code> diffs;
    target.for_each([&](Code c) {
        const Code d = c ^ s.code;
        const auto w = static_cast<std::size_t>(std::popcount(d));
        if (w < r.distance) {
            r.distance = w;
            diffs.clear();
        }
        if (w == r.distance) diffs.push_back(d);
    });
    const std::size_t width = s.scope.size();
    for (Code d : diffs) {
        std::vector<std::size_t> idx;
        for (std::size_t p = 0; p < width; ++p)
            if (code_bit(d, width, p)) idx.push_back(s.scope[p]);
        r.index_sets.push_back(std::move(idx));
    }
    std::sort(r.index_sets.begin(), r.index_sets.end());
    return r;
}

BitGather::BitGather(const Scope& from, const Scope& to) {
    for (std::size_t q = 0; q < to.size(); ++q) {
        if (auto p = from.position_of(to[q]))
            moves_.emplace_back(static_cast<unsigned>(from.size() - 1 - *p), static_cast<unsigned>(to.size() - 1 - q));
    }
}

State project_state(const State& s, const Scope& onto) {
    if (!onto.is_subset_of(s.scope)) throw InvalidArgument("projection target is not a subset of the scope");
    return State{onto, BitGather(s.scope, onto)(s.code)};
}

StateSet project(const StateSet& set, const Scope& onto) {
    if (!onto.is_subset_of(set.scope())) throw InvalidArgument("projection target is not a subset of the scope");
    if (onto == set.scope()) return set;
    BitGather gather(set.scope(), onto);
    StateSet out(onto);
    if (out.dense()) {
        set.for_each([&](Code c) { out.insert(gather(c)); });
        return out;
    }
    std::vector<Code> codes;
    codes.reserve(set.size());
    set.for_each([&](Code c) { codes.push_back(gather(c)); });
    return StateSet::of(onto, std::move(codes));
}

StateSet cross(const StateSet& a, const StateSet& b) {
    const Scope joined = a.scope().unite(b.scope());
    const Scope shared = a.scope().intersect(b.scope());
    const BitGather a_shared(a.scope(), shared), b_shared(b.scope(), shared);
    const BitGather a_up(a.scope(), joined), b_up(b.scope(), joined);

    std::unordered_map<Code, std::vector<Code>> by_key;
    b.for_each([&](Code c) { by_key[b_shared(c)].push_back(b_up(c)); });

    StateSet out(joined);
    std::vector<Code> sparse;
    a.for_each([&](Code c) {
        auto it = by_key.find(a_shared(c));
        if (it == by_key.end()) return;
        const Code lifted = a_up(c);
        for (Code other : it->second) {
            if (out.dense()) out.insert(lifted | other);
            else sparse.push_back(lifted | other);
        }
    });
    if (!out.dense()) return StateSet::of(joined, std::move(sparse));
    return out;
}

}  // namespace bnet
