#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnet/network.hpp"

/// Brute-force reference implementations. Deliberately naive: explicit
/// adjacency over all 2^n states, expression-tree evaluation, no bit tricks.
/// Results are exchanged as bit strings (variable 1 leftmost) so nothing but
/// the network itself is shared with the main engine.
namespace bnet::oracle {

inline constexpr std::size_t kMaxVariables = 14;

struct ExplicitSTG {
    std::size_t n = 0;
    /// succ[s] lists every s' with s -> s', self-loop included. Internal
    /// index s has variable i at bit i.
    std::vector<std::vector<std::uint32_t>> succ;
    std::vector<std::uint32_t> component;                  // SCC id per state
    std::vector<std::vector<std::uint32_t>> attractors;    // sorted by smallest bit string
    std::vector<std::vector<std::uint32_t>> reachable;     // attractor ids reachable from each state

    std::size_t states() const noexcept { return succ.size(); }
    std::size_t edge_count() const;
    std::size_t self_loop_count() const;
    std::string label(std::uint32_t s) const;
    std::uint32_t index(const std::string& bits) const;
};

ExplicitSTG oracle_stg(const BooleanNetwork& bn);

std::vector<std::vector<std::string>> oracle_attractors(const ExplicitSTG& stg);

/// Index of the attractor whose states are exactly `states`; throws if none.
std::size_t find_attractor(const ExplicitSTG& stg, const std::vector<std::string>& states);

std::vector<std::string> oracle_weak_basin(const ExplicitSTG& stg, std::size_t attractor);

/// States from which `attractor` is reachable and no other attractor is.
std::vector<std::string> oracle_strong_basin(const ExplicitSTG& stg, std::size_t attractor);

/// Weak basin minus the weak basins of every other attractor.
std::vector<std::string> oracle_strong_basin_by_subtraction(const ExplicitSTG& stg, std::size_t attractor);

struct MinimalControls {
    std::size_t distance = 0;
    std::vector<std::vector<std::size_t>> witnesses;  // 0-based indices, lexicographic
};

/// Enumerates controls by increasing size; the first size with a hit is minimal.
MinimalControls oracle_minimal_controls(const ExplicitSTG& stg, const std::string& source, std::size_t attractor);

}  // namespace bnet::oracle
