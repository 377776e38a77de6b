#include "bnet/report.hpp"

#include <algorithm>

namespace bnet::report {

namespace {

Json names_of(const BooleanNetwork& bn, const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(bn.name(i));
    return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json network_json(const BooleanNetwork& bn, const DepGraph& g) {
    Json vars = Json::array();
    for (std::size_t i = 0; i < bn.size(); ++i) {
        vars.push_back({{"index", i + 1},
                        {"name", bn.name(i)},
                        {"function", bn.function(i).to_string(bn.names())},
                        {"inputs", names_of(bn, g.parents[i])}});
    }
    Json edges = Json::array();
    for (const auto& [from, to] : g.edges()) edges.push_back({bn.name(from), bn.name(to)});
    return {{"schema", kSchemaVersion},
            {"variables", std::move(vars)},
            {"edges", std::move(edges)},
            {"warnings", bn.warnings()}};
}

Json state_set_json(const BooleanNetwork& bn, const StateSet& set, std::size_t max_listed) {
    Json out = {{"scope", names_of(bn, set.scope().vars())}, {"count", set.size()}};
    if (set.size() <= max_listed) out["states"] = set.to_strings();
    return out;
}

Json attractors_json(const BooleanNetwork& bn, const std::vector<Attractor>& as) {
    Json out = Json::array();
    for (std::size_t i = 0; i < as.size(); ++i) {
        Json a = state_set_json(bn, as[i].states);
        a["index"] = i;
        out.push_back(std::move(a));
    }
    return out;
}

Json blocks_json(const BooleanNetwork& bn, const BlockGraph& bg) {
    Json out = Json::array();
    for (const auto& b : bg.blocks) {
        out.push_back({{"id", b.id},
                       {"scc", names_of(bn, b.scc)},
                       {"vertices", names_of(bn, b.vertices)},
                       {"parents", b.parents},
                       {"control_nodes", names_of(bn, b.control_nodes)},
                       {"elementary", b.elementary},
                       {"ac", names_of(bn, b.ac)},
                       {"ac_minus", names_of(bn, b.ac_minus)}});
    }
    return out;
}

Json control_json(const BooleanNetwork& bn, const ControlAnswer& answer) {
    Json witnesses = Json::array();
    for (const auto& c : answer.witnesses) {
        std::vector<std::size_t> one_based;
        for (std::size_t i : c.indices) one_based.push_back(i + 1);
        witnesses.push_back({{"indices", one_based}, {"names", names_of(bn, c.indices)}});
    }
    return {{"method", to_string(answer.method)},
            {"distance", answer.distance},
            {"witness_count", answer.witness_count},
            {"truncated", answer.truncated()},
            {"witnesses", std::move(witnesses)},
            {"basin_size", answer.basin_size},
            {"degraded", answer.degraded},
            {"elapsed_ms", answer.elapsed_ms}};
}

Json bench_json(const BenchReport& report, const TableOptions& options) {
    const char* method = options.method == TableMethod::Global   ? "global"
                         : options.method == TableMethod::Decomp ? "decomp"
                                                                 : "both";
    Json nets = Json::array();
    for (const auto& net : report.networks) {
        Json pairs = Json::array();
        std::vector<double> speedups;
        for (const auto& p : net.pairs) {
            if (auto s = p.speedup()) speedups.push_back(*s);
            pairs.push_back({{"source", p.source},
                             {"target", p.target},
                             {"source_state", p.source_state},
                             {"target_state", p.target_state},
                             {"hd", p.hd},
                             {"drivers", p.drivers ? Json(*p.drivers) : Json(nullptr)},
                             {"witness_count", p.witness_count},
                             {"t_global_ms", optional_number(p.t_global_ms)},
                             {"t_decom_ms", optional_number(p.t_decom_ms)},
                             {"speedup", optional_number(p.speedup())},
                             {"status", p.status()}});
        }
        Json range = nullptr;
        if (!speedups.empty()) {
            std::sort(speedups.begin(), speedups.end());
            range = {{"min", speedups.front()}, {"max", speedups.back()}};
        }
        nets.push_back({{"network", net.network},
                        {"n", net.n},
                        {"blocks", net.blocks},
                        {"max_block_scope", net.max_block_scope},
                        {"attractors", net.attractors},
                        {"excluded_sources", net.excluded_sources},
                        {"pairs", std::move(pairs)},
                        {"speedup_range", std::move(range)}});
    }
    return {{"schema", kSchemaVersion},
            {"options",
             {{"method", method}, {"reps", options.reps}, {"timeout_s", options.timeout_s}, {"scope_cap", options.scope_cap}}},
            {"networks", std::move(nets)}};
}

Json without_timings(const Json& j) {
    static const char* const kTimingKeys[] = {"t_global_ms", "t_decom_ms", "speedup", "speedup_range", "elapsed_ms"};
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (std::find(std::begin(kTimingKeys), std::end(kTimingKeys), it.key()) != std::end(kTimingKeys)) continue;
            out[it.key()] = without_timings(it.value());
        }
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& v : j) out.push_back(without_timings(v));
        return out;
    }
    return j;
}

}  // namespace bnet::report
