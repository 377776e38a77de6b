#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bnet/attractor.hpp"
#include "bnet/parser.hpp"
#include "bnet/state.hpp"

namespace bnet::test {

inline constexpr const char* kWorkedExample =
    "x1, !x2 | (x1 & x2)\n"
    "x2, x1 & x2\n"
    "x3, x3 & !(x1 & x2)\n";

inline BooleanNetwork example_network() { return parse_network(kWorkedExample); }

inline std::string fixture(const std::string& name) { return std::string(BNET_FIXTURE_DIR) + "/" + name; }

/// Sorted bit strings of a set.
inline std::vector<std::string> bits(const StateSet& s) { return s.to_strings(); }

inline std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline StateSet set_of(const Scope& scope, std::vector<std::string> states) {
    return StateSet::from_strings(scope, states);
}

inline Attractor attractor_of(const Scope& scope, std::vector<std::string> states) {
    return Attractor{set_of(scope, std::move(states))};
}

inline Scope full_scope(const BooleanNetwork& bn) { return Scope::full(bn.size()); }

}  // namespace bnet::test
