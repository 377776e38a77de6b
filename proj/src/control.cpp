#include "bnet/control.hpp"

#include <chrono>

#include "bnet/error.hpp"

namespace bnet {

State apply_control(const Control& c, const State& s) {
    State out = s;
    for (std::size_t i : c.indices) {
        auto pos = s.scope.position_of(i);
        if (!pos) throw InvalidArgument("control index " + std::to_string(i + 1) + " is out of range");
        out.code ^= code_mask(s.scope.size(), *pos);
    }
    return out;
}

const char* to_string(ControlMethod m) { return m == ControlMethod::Global ? "global" : "decomp"; }

ControlAnswer controls_into(const State& source, const StateSet& basin, const ControlOptions& options) {
    HdResult hd = hd_argmin(source, basin);
    ControlAnswer ans;
    ans.distance = hd.distance;
    ans.witness_count = hd.index_sets.size();
    ans.basin_size = basin.size();
    const std::size_t keep = options.witness_cap == 0 ? hd.index_sets.size()
                                                      : std::min(options.witness_cap, hd.index_sets.size());
    for (std::size_t i = 0; i < keep; ++i) ans.witnesses.push_back(Control{std::move(hd.index_sets[i])});
    return ans;
}

namespace {

void require_full_source(const BooleanNetwork& bn, const State& source) {
    if (source.scope != Scope::full(bn.size()))
        throw InvalidArgument("source state must assign every variable of the network");
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ControlAnswer global_minimal_control(const BooleanNetwork& bn, const State& source, const Attractor& target,
                                     const ControlOptions& options) {
    require_full_source(bn, source);
    const auto t0 = std::chrono::steady_clock::now();
    LocalTS ts = elementary_ts(Scope::full(bn.size()).vars(), bn, options.limits);
    if (!is_attractor(ts, target.states)) throw InvalidArgument("control target is not an attractor");
    StateSet basin = strong_basin(ts, target);
    ControlAnswer ans = controls_into(source, basin, options);
    ans.method = ControlMethod::Global;
    ans.elapsed_ms = since(t0);
    return ans;
}

ControlAnswer decomp_minimal_control(Decomposition& decomp, const State& source, const Attractor& target,
                                     const ControlOptions& options) {
    require_full_source(decomp.network(), source);
    const auto t0 = std::chrono::steady_clock::now();
    DecompStats stats;
    StateSet basin = decomp.strong_basin(target, &stats);
    ControlAnswer ans = controls_into(source, basin, options);
    ans.method = ControlMethod::Decomp;
    ans.degraded = stats.degraded;
    ans.elapsed_ms = since(t0);
    return ans;
}

}  // namespace bnet
