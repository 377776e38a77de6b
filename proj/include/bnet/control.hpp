#pragma once

#include <string>
#include <vector>

#include "bnet/attractor.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/network.hpp"
#include "bnet/state.hpp"

namespace bnet {

/// Variables (0-based, ascending) toggled for a single time step.
struct Control {
    std::vector<std::size_t> indices;

    friend bool operator==(const Control&, const Control&) = default;
    friend auto operator<=>(const Control&, const Control&) = default;
};

/// Toggles the controlled variables of a full-network state.
State apply_control(const Control& c, const State& s);

enum class ControlMethod { Global, Decomp };

const char* to_string(ControlMethod m);

struct ControlOptions {
    static constexpr std::size_t kDefaultWitnessCap = 64;

    /// Maximum witnesses kept; 0 keeps all of them.
    std::size_t witness_cap = kDefaultWitnessCap;
    Limits limits;
};

/// Minimal controls from a source state to a target attractor.
struct ControlAnswer {
    std::size_t distance = 0;
    std::vector<Control> witnesses;  // lexicographic by index set, possibly truncated
    std::size_t witness_count = 0;   // before truncation
    ControlMethod method = ControlMethod::Global;
    std::size_t basin_size = 0;
    bool degraded = false;
    double elapsed_ms = 0.0;

    bool truncated() const noexcept { return witnesses.size() < witness_count; }
};

/// Strong basin by the global fixpoint, then the closest basin states to `source`.
ControlAnswer global_minimal_control(const BooleanNetwork& bn, const State& source, const Attractor& target,
                                     const ControlOptions& options = {});

/// Same contract, with the basin assembled block by block.
ControlAnswer decomp_minimal_control(Decomposition& decomp, const State& source, const Attractor& target,
                                     const ControlOptions& options = {});

/// Shared tail of both methods: hd(source, basin) and its arg set.
ControlAnswer controls_into(const State& source, const StateSet& basin, const ControlOptions& options);

}  // namespace bnet
