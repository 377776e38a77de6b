#pragma once

#include <json.hpp>

#include "bnet/attractor.hpp"
#include "bnet/bench.hpp"
#include "bnet/control.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/network.hpp"

/// JSON encodings shared by the CLI and the benchmark reports.
namespace bnet::report {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
/// State lists longer than this are replaced by their count.
inline constexpr std::size_t kMaxListedStates = 4096;

Json network_json(const BooleanNetwork& bn, const DepGraph& g);
Json state_set_json(const BooleanNetwork& bn, const StateSet& set, std::size_t max_listed = kMaxListedStates);
Json attractors_json(const BooleanNetwork& bn, const std::vector<Attractor>& as);
Json blocks_json(const BooleanNetwork& bn, const BlockGraph& bg);
Json control_json(const BooleanNetwork& bn, const ControlAnswer& answer);
Json bench_json(const BenchReport& report, const TableOptions& options);

/// Copy of `j` with every timing-dependent field removed, for reproducibility checks.
Json without_timings(const Json& j);

}  // namespace bnet::report
