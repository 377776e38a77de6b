#include "bnet/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>

#include "bnet/bench.hpp"
#include "bnet/control.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/oracle.hpp"
#include "bnet/parser.hpp"
#include "bnet/report.hpp"

namespace bnet {

namespace {

using report::Json;

struct Common {
    std::string file;
    bool json = false;
    bool syntactic = false;
    std::size_t cap = Limits::kDefaultScopeCap;
    double timeout_s = 0.0;  // 0 = none
    std::uint64_t seed = 0;

    Limits limits() const {
        Limits l;
        l.scope_cap = cap;
        if (timeout_s > 0)
            l.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout_s));
        return l;
    }
    SupportMode mode() const { return syntactic ? SupportMode::Syntactic : SupportMode::Semantic; }
};

void add_common(CLI::App* cmd, Common& c, bool with_file = true) {
    if (with_file) cmd->add_option("file", c.file, "network file (.bn)")->required();
    cmd->add_flag("--json", c.json, "emit JSON");
    cmd->add_flag("--syntactic", c.syntactic, "use syntactic instead of semantic support");
    cmd->add_option("--cap", c.cap, "largest state-space scope in variables")->envname("BNCTL_CAP")->check(CLI::Range(1, 64));
    cmd->add_option("--timeout", c.timeout_s, "wall-clock limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", c.seed, "seed for randomised steps");
}

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string names(const BooleanNetwork& bn, const std::vector<std::size_t>& idx) {
    std::vector<std::string> v;
    for (std::size_t i : idx) v.push_back(bn.name(i));
    return "{" + join(v) + "}";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_set(std::ostream& out, const StateSet& s) {
    if (s.size() > report::kMaxListedStates) {
        out << "(" << s.size() << " states, not listed)\n";
        return;
    }
    for (const auto& bits : s.to_strings()) out << bits << "\n";
}

/// Network plus lazily computed global attractors.
class Session {
public:
    explicit Session(const Common& c) : common_(c), bn_(load_network(c.file)), graph_(dependency_graph(bn_, c.mode())) {}

    const BooleanNetwork& bn() const { return bn_; }
    const DepGraph& graph() const { return graph_; }
    Scope full() const { return Scope::full(bn_.size()); }

    const std::vector<Attractor>& attractors_list() {
        if (!attractors_) {
            LocalTS ts = elementary_ts(full().vars(), bn_, common_.limits());
            attractors_ = attractors(ts, AttractorMethod::Auto, common_.seed);
        }
        return *attractors_;
    }

    /// "attr:i", a bare index, or a state bit string of some attractor.
    Attractor resolve_attractor(const std::string& text) {
        if (auto idx = attractor_index(text)) {
            const auto& as = attractors_list();
            if (*idx >= as.size())
                throw InvalidArgument("attractor index " + std::to_string(*idx) + " out of range (0.." +
                                      std::to_string(as.size() - 1) + ")");
            return as[*idx];
        }
        const State s = State::parse(full(), text);
        StateSet single(full());
        single.insert(s.code);
        if (is_network_attractor(bn_, single)) return Attractor{single};
        for (const auto& a : attractors_list())
            if (a.states.contains(s)) return a;
        throw InvalidArgument("state " + text + " does not belong to an attractor");
    }

    State resolve_source(const std::string& text) {
        if (auto idx = attractor_index(text)) {
            Attractor a = resolve_attractor(text);
            if (!a.singleton())
                throw InvalidArgument("attractor " + std::to_string(*idx) + " has " + std::to_string(a.size()) +
                                      " states; only single-state attractors can be sources");
            return State{full(), *a.states.min()};
        }
        return State::parse(full(), text);
    }

private:
    /// "attr:i" or a plain number is an index, unless it is a 0/1 string of state length.
    std::optional<std::size_t> attractor_index(const std::string& text) const {
        const bool prefixed = text.rfind("attr:", 0) == 0;
        const std::string digits = prefixed ? text.substr(5) : text;
        const bool numeric = !digits.empty() && digits.size() <= 9 &&
                             std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (prefixed && !numeric) throw InvalidArgument("bad attractor reference '" + text + "'");
        if (!numeric) return std::nullopt;
        const bool looks_like_state = digits.size() == bn_.size() && digits.find_first_not_of("01") == std::string::npos;
        if (!prefixed && looks_like_state) return std::nullopt;
        return std::stoull(digits);
    }

    Common common_;
    BooleanNetwork bn_;
    DepGraph graph_;
    std::optional<std::vector<Attractor>> attractors_;
};

ControlMethod parse_method(const std::string& m) {
    if (m == "global") return ControlMethod::Global;
    if (m == "decomp") return ControlMethod::Decomp;
    throw InvalidArgument("unknown method '" + m + "'");
}

TableMethod parse_table_method(const std::string& m) {
    if (m == "global") return TableMethod::Global;
    if (m == "decomp") return TableMethod::Decomp;
    if (m == "both") return TableMethod::Both;
    throw InvalidArgument("unknown method '" + m + "'");
}

void print_warnings(const BooleanNetwork& bn, std::ostream& err) {
    for (const auto& w : bn.warnings()) err << "warning: " << w << "\n";
}

int cmd_parse(const Common& c, std::ostream& out, std::ostream& err) {
    Session s(c);
    print_warnings(s.bn(), err);
    if (c.json) print_json(out, report::network_json(s.bn(), s.graph()));
    else out << to_text(s.bn());
    return kExitOk;
}

int cmd_blocks(const Common& c, std::ostream& out) {
    Session s(c);
    BlockGraph bg = form_blocks(s.graph());
    if (c.json) {
        print_json(out, report::blocks_json(s.bn(), bg));
        return kExitOk;
    }
    for (const auto& b : bg.blocks) {
        std::vector<std::string> parents;
        for (auto p : b.parents) parents.push_back("B" + std::to_string(p + 1));
        out << "B" << b.id + 1 << ": vertices=" << names(s.bn(), b.vertices) << " scc=" << names(s.bn(), b.scc)
            << " parents={" << join(parents) << "} control_nodes=" << names(s.bn(), b.control_nodes)
            << " elementary=" << (b.elementary ? "yes" : "no") << " ac=" << names(s.bn(), b.ac)
            << " ac_minus=" << names(s.bn(), b.ac_minus) << "\n";
    }
    return kExitOk;
}

int cmd_attractors(const Common& c, std::ostream& out) {
    Session s(c);
    const auto& as = s.attractors_list();
    if (c.json) {
        print_json(out, Json{{"schema", report::kSchemaVersion}, {"attractors", report::attractors_json(s.bn(), as)}});
        return kExitOk;
    }
    for (std::size_t i = 0; i < as.size(); ++i)
        out << "A" << i << " (" << as[i].size() << (as[i].size() == 1 ? " state): " : " states): ")
            << join(as[i].states.to_strings(), " ") << "\n";
    return kExitOk;
}

StateSet basin_by(ControlMethod method, bool weak, Session& s, const Common& c, const Attractor& a, DecompStats* stats) {
    if (weak || method == ControlMethod::Global) {
        LocalTS ts = elementary_ts(s.full().vars(), s.bn(), c.limits());
        return weak ? weak_basin(ts, a) : strong_basin(ts, a);
    }
    DecompOptions opts;
    opts.limits = c.limits();
    Decomposition d(s.bn(), s.graph(), opts);
    return d.strong_basin(a, stats);
}

int cmd_basin(const Common& c, const std::string& target, bool weak, const std::string& method, std::ostream& out,
              std::ostream& err) {
    Session s(c);
    const Attractor a = s.resolve_attractor(target);
    DecompStats stats;
    StateSet basin = basin_by(parse_method(method), weak, s, c, a, &stats);
    if (stats.degraded) err << "note: local scope above the cap; fell back to the global computation\n";
    if (c.json) {
        Json j = {{"schema", report::kSchemaVersion},
                  {"kind", weak ? "weak" : "strong"},
                  {"method", weak ? "global" : method},
                  {"target", report::state_set_json(s.bn(), a.states)},
                  {"basin", report::state_set_json(s.bn(), basin)},
                  {"degraded", stats.degraded}};
        print_json(out, j);
        return kExitOk;
    }
    out << (weak ? "weak" : "strong") << " basin of {" << join(a.states.to_strings()) << "}: " << basin.size()
        << (basin.size() == 1 ? " state\n" : " states\n");
    print_set(out, basin);
    return kExitOk;
}

std::string describe(const BooleanNetwork& bn, const ControlAnswer& a) {
    std::string out = std::string(to_string(a.method)) + ": d=" + std::to_string(a.distance) + ", " +
                      std::to_string(a.witness_count) + (a.witness_count == 1 ? " witness" : " witnesses");
    if (a.truncated()) out += " (showing " + std::to_string(a.witnesses.size()) + ")";
    out += "\n";
    for (const auto& w : a.witnesses) out += "  " + names(bn, w.indices) + "\n";
    return out;
}

int cmd_control(const Common& c, const std::string& source, const std::string& target, const std::string& method,
                bool all, std::ostream& out) {
    Session s(c);
    const State src = s.resolve_source(source);
    const Attractor tgt = s.resolve_attractor(target);
    ControlOptions opts;
    opts.witness_cap = all ? 0 : ControlOptions::kDefaultWitnessCap;
    opts.limits = c.limits();

    std::vector<ControlAnswer> answers;
    if (method == "global" || method == "both") answers.push_back(global_minimal_control(s.bn(), src, tgt, opts));
    if (method == "decomp" || method == "both") {
        DecompOptions dopts;
        dopts.limits = opts.limits;
        Decomposition d(s.bn(), s.graph(), dopts);
        answers.push_back(decomp_minimal_control(d, src, tgt, opts));
    }
    if (answers.empty()) throw InvalidArgument("unknown method '" + method + "'");
    const bool agree = answers.size() < 2 || (answers[0].distance == answers[1].distance &&
                                              answers[0].witness_count == answers[1].witness_count &&
                                              answers[0].witnesses == answers[1].witnesses);
    if (c.json) {
        Json list = Json::array();
        for (const auto& a : answers) list.push_back(report::control_json(s.bn(), a));
        Json j = {{"schema", report::kSchemaVersion},
                  {"source", src.to_string()},
                  {"target", report::state_set_json(s.bn(), tgt.states)},
                  {"answers", std::move(list)}};
        if (answers.size() == 2) j["agree"] = agree;
        print_json(out, j);
        return kExitOk;
    }
    out << "source " << src.to_string() << " -> target {" << join(tgt.states.to_strings()) << "}\n";
    for (const auto& a : answers) out << describe(s.bn(), a);
    if (answers.size() == 2) out << "agree: " << (agree ? "yes" : "no") << "\n";
    return kExitOk;
}

TableOptions table_options(const Common& c, const std::string& method, std::size_t reps, std::size_t workers) {
    TableOptions t;
    t.method = parse_table_method(method);
    t.reps = reps;
    t.workers = workers;
    t.scope_cap = c.cap;
    if (c.timeout_s > 0) t.timeout_s = c.timeout_s;
    return t;
}

int cmd_table(const Common& c, const TableOptions& t, bool text, std::ostream& out) {
    const BooleanNetwork bn = load_network(c.file);
    BenchRecord rec = run_table(bn, "file:" + c.file, t);
    if (c.json) print_json(out, report::bench_json(BenchReport{{rec}}, t));
    else out << (text ? table_text(rec) : table_csv(rec));
    return kExitOk;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << content;
    if (!f) throw Error("failed writing '" + path + "'");
}

int cmd_bench(const Common& c, const std::vector<std::string>& inputs, const TableOptions& t, const std::string& prefix,
              std::ostream& out, std::ostream& err) {
    std::vector<NetworkSource> sources;
    for (const auto& in : inputs) {
        const bool tagged = in.rfind("file:", 0) == 0 || in.rfind("random:", 0) == 0 || in.rfind("chained:", 0) == 0;
        sources.push_back(tagged ? NetworkSource::parse(in) : NetworkSource::parse("file:" + in));
    }
    BenchReport rep = run_bench(sources, t);
    const std::string csv = bench_csv(rep);
    const std::string json = report::bench_json(rep, t).dump(2) + "\n";
    if (!prefix.empty()) {
        write_file(prefix + ".csv", csv);
        write_file(prefix + ".json", json);
    } else {
        out << (c.json ? json : csv);
    }
    for (const auto& net : rep.networks) {
        std::optional<double> lo, hi;
        for (const auto& p : net.pairs)
            if (auto s = p.speedup()) {
                lo = lo ? std::min(*lo, *s) : *s;
                hi = hi ? std::max(*hi, *s) : *s;
            }
        err << net.network << ": n=" << net.n << " blocks=" << net.blocks << " attractors=" << net.attractors.size()
            << " pairs=" << net.pairs.size();
        if (lo) err << " speedup " << *lo << ".." << *hi;
        err << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const Common& c, const std::string& source, const std::string& target, std::ostream& out) {
    const BooleanNetwork bn = load_network(c.file);
    const auto stg = oracle::oracle_stg(bn);
    const auto as = oracle::oracle_attractors(stg);
    Json j = {{"schema", report::kSchemaVersion},
              {"states", stg.states()},
              {"edges", stg.edge_count()},
              {"self_loops", stg.self_loop_count()},
              {"attractors", as}};
    std::optional<std::size_t> t;
    if (!target.empty()) {
        std::string digits = target.rfind("attr:", 0) == 0 ? target.substr(5) : "";
        if (!digits.empty()) {
            t = std::stoull(digits);
            if (*t >= as.size()) throw InvalidArgument("attractor index out of range");
        } else {
            for (std::size_t i = 0; i < as.size() && !t; ++i)
                if (std::find(as[i].begin(), as[i].end(), target) != as[i].end()) t = i;
            if (!t) throw InvalidArgument("state " + target + " does not belong to an attractor");
        }
        j["target"] = *t;
        j["weak_basin"] = oracle::oracle_weak_basin(stg, *t);
        j["strong_basin"] = oracle::oracle_strong_basin(stg, *t);
    }
    if (!source.empty()) {
        if (!t) throw InvalidArgument("--source needs --target");
        std::string src = source;
        if (source.rfind("attr:", 0) == 0) {
            const auto i = std::stoull(source.substr(5));
            if (i >= as.size() || as[i].size() != 1) throw InvalidArgument("source attractor must exist and be a single state");
            src = as[i].front();
        }
        auto mc = oracle::oracle_minimal_controls(stg, src, *t);
        Json w = Json::array();
        for (const auto& set : mc.witnesses) {
            std::vector<std::size_t> one_based;
            for (auto i : set) one_based.push_back(i + 1);
            w.push_back(one_based);
        }
        j["source"] = src;
        j["control"] = {{"distance", mc.distance}, {"witnesses", w}};
    }
    if (c.json) {
        print_json(out, j);
        return kExitOk;
    }
    out << "states=" << stg.states() << " edges=" << stg.edge_count() << " self_loops=" << stg.self_loop_count() << "\n";
    for (std::size_t i = 0; i < as.size(); ++i) out << "A" << i << ": " << join(as[i], " ") << "\n";
    if (t) out << "strong basin of A" << *t << ": " << join(j["strong_basin"].get<std::vector<std::string>>(), " ") << "\n";
    if (j.contains("control")) {
        out << "minimal control from " << j["source"].get<std::string>() << ": d=" << j["control"]["distance"].get<std::size_t>()
            << "\n";
        for (const auto& set : j["control"]["witnesses"]) out << "  " << set.dump() << "\n";
    }
    return kExitOk;
}

int cmd_gen(std::size_t n, std::size_t k, std::uint64_t seed, const std::string& chained, const std::string& output,
            std::ostream& out) {
    BooleanNetwork bn = chained.empty() ? random_network(n, k, seed)
                                        : NetworkSource::parse("chained:" + chained + ":" + std::to_string(seed)).load();
    const std::string text = to_text(bn);
    if (output.empty()) out << text;
    else write_file(output, text);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Attractors, basins and minimal target control for asynchronous Boolean networks", "bnctl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bnctl 1.0");

    Common common;
    std::string target, source, method = "global";
    bool weak = false, all = false, text = false;
    std::size_t reps = 5, workers = 0, gen_n = 10, gen_k = 2;
    std::string prefix, chained, output;
    std::vector<std::string> inputs;

    auto* parse = app.add_subcommand("parse", "check a network file and print it normalised");
    add_common(parse, common);
    auto* blocks = app.add_subcommand("blocks", "print the basic blocks in topological order");
    add_common(blocks, common);
    auto* attrs = app.add_subcommand("attractors", "list the attractors of the full network");
    add_common(attrs, common);

    auto* basin = app.add_subcommand("basin", "strong (or weak) basin of an attractor");
    add_common(basin, common);
    basin->add_option("--target", target, "attractor: attr:i, index, or one of its states")->required();
    basin->add_flag("--weak", weak, "weak basin instead of strong");
    basin->add_option("--method", method, "global or decomp")->check(CLI::IsMember({"global", "decomp"}));

    auto* control = app.add_subcommand("control", "minimal simultaneous single-step control");
    add_common(control, common);
    control->add_option("--source", source, "state bits or attr:i")->required();
    control->add_option("--target", target, "attr:j or a state of the target attractor")->required();
    control->add_option("--method", method, "global, decomp or both")->check(CLI::IsMember({"global", "decomp", "both"}));
    control->add_flag("--all", all, "list every minimal control");

    auto* table = app.add_subcommand("table", "all-pairs (HD, #D) matrix between single-state attractors");
    add_common(table, common);
    table->add_option("--method", method, "global, decomp or both")->check(CLI::IsMember({"global", "decomp", "both"}));
    table->add_option("--reps", reps, "timed repetitions per pair")->check(CLI::PositiveNumber);
    table->add_option("--workers", workers, "worker threads (0 = all cores)");
    table->add_flag("--text", text, "aligned text instead of CSV");

    auto* bench = app.add_subcommand("bench", "time global against decomposition on a list of networks");
    add_common(bench, common, false);
    bench->add_option("networks", inputs, "file paths, file:PATH, random:N:K:SEED or chained:M:SIZE:SEED");
    bench->add_option("--method", method, "global, decomp or both")->check(CLI::IsMember({"global", "decomp", "both"}));
    bench->add_option("--reps", reps, "timed repetitions per pair")->check(CLI::PositiveNumber);
    bench->add_option("--workers", workers, "worker threads (0 = all cores)");
    bench->add_option("--out", prefix, "write PREFIX.csv and PREFIX.json instead of printing");

    auto* orc = app.add_subcommand("oracle", "brute-force reference answers (at most 14 variables)");
    add_common(orc, common);
    orc->add_option("--target", target, "attr:i or a state of the target attractor");
    orc->add_option("--source", source, "state bits or attr:i (needs --target)");

    auto* gen = app.add_subcommand("gen", "emit a random network");
    add_common(gen, common, false);
    gen->add_option("--n", gen_n, "variables")->check(CLI::PositiveNumber);
    gen->add_option("--k", gen_k, "largest in-degree")->check(CLI::PositiveNumber);
    gen->add_option("--chained", chained, "MODULES:SIZE chained-module family instead");
    gen->add_option("-o,--output", output, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*parse) return cmd_parse(common, out, err);
        if (*blocks) return cmd_blocks(common, out);
        if (*attrs) return cmd_attractors(common, out);
        if (*basin) return cmd_basin(common, target, weak, method, out, err);
        if (*control) return cmd_control(common, source, target, method, all, out);
        if (*table) {
            if (method == "global" && table->count("--method") == 0) method = "both";
            return cmd_table(common, table_options(common, method, reps, workers), text, out);
        }
        if (*bench) {
            if (bench->count("--method") == 0) method = "both";
            return cmd_bench(common, inputs, table_options(common, method, reps, workers), prefix, out, err);
        }
        if (*orc) return cmd_oracle(common, source, target, out);
        if (*gen) return cmd_gen(gen_n, gen_k, common.seed, chained, output, out);
    } catch (const ParseError& e) {
        err << "error: " << common.file << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const Timeout& e) {
        err << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bnet
