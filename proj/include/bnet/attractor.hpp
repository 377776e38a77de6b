#pragma once

#include <cstdint>
#include <vector>

#include "bnet/state.hpp"
#include "bnet/transition.hpp"

namespace bnet {

/// A bottom strongly connected component of a transition system.
struct Attractor {
    StateSet states;

    const Scope& scope() const noexcept { return states.scope(); }
    std::size_t size() const noexcept { return states.size(); }
    bool singleton() const noexcept { return states.size() == 1; }

    friend bool operator==(const Attractor&, const Attractor&) = default;
};

enum class AttractorMethod { Auto, Tarjan, ForwardBackward };

/// Explicit graphs up to this many states go through Tarjan under AttractorMethod::Auto.
inline constexpr std::size_t kTarjanStateLimit = std::size_t{1} << 20;

/// All attractors, ordered by their lexicographically smallest state.
std::vector<Attractor> attractors(const LocalTS& ts, AttractorMethod method = AttractorMethod::Auto,
                                  std::uint64_t seed = 0);

/// True iff `set` is nonempty, closed under transitions and strongly connected in `ts`.
bool is_attractor(const LocalTS& ts, const StateSet& set);

/// Same check against the full network without materialising its state space.
bool is_network_attractor(const BooleanNetwork& bn, const StateSet& set);

StateSet weak_basin(const LocalTS& ts, const Attractor& a);

/// F(T) = T \ (pre(post(T) \ T) ∩ T): drops every state of T with a transition leaving T.
StateSet f_step(const LocalTS& ts, const StateSet& t);

struct StrongBasinStats {
    std::size_t weak_size = 0;
    std::size_t iterations = 0;  // applications of F, including the one that reached the fixpoint
};

/// Greatest fixpoint of F below the weak basin; equals the strong basin of `a`.
StateSet strong_basin(const LocalTS& ts, const Attractor& a, StrongBasinStats* stats = nullptr);

}  // namespace bnet
