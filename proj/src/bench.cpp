#include "bnet/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "bnet/control.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/parser.hpp"

namespace bnet {

BooleanNetwork chained_module_network(std::size_t modules, std::size_t size, std::uint64_t seed) {
    if (modules == 0 || size < 2) throw InvalidArgument("chained network needs at least one module of size >= 2");
    std::mt19937_64 rng(seed);
    const std::size_t n = modules * size;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < modules; ++j)
        for (std::size_t i = 0; i < size; ++i) names.push_back("m" + std::to_string(j + 1) + "_" + std::to_string(i + 1));

    auto combine = [&](BoolExpr a, BoolExpr b) {
        return (rng() & 1U) ? BoolExpr::conj({std::move(a), std::move(b)}) : BoolExpr::disj({std::move(a), std::move(b)});
    };

    std::vector<BoolExpr> funcs(n, BoolExpr::constant(false));
    for (std::size_t j = 0; j < modules; ++j) {
        const std::size_t base = j * size;
        std::vector<std::size_t> ring(size);
        for (std::size_t i = 0; i < size; ++i) ring[i] = base + i;
        for (std::size_t i = size; i > 1; --i) std::swap(ring[i - 1], ring[uniform_below(rng, i)]);

        for (std::size_t r = 0; r < size; ++r) {
            const std::size_t v = ring[r];
            const std::size_t pred = ring[(r + size - 1) % size];
            BoolExpr f = BoolExpr::var(pred);
            if (size >= 3 && (rng() & 1U)) {
                std::size_t w = pred;
                while (w == pred || w == v) w = base + uniform_below(rng, size);
                f = combine(std::move(f), BoolExpr::var(w));
            }
            funcs[v] = std::move(f);
        }
        if (j == 0) continue;
        const std::size_t up = (j - 1) * size;
        const std::size_t entries = 1 + (rng() & 1U);
        for (std::size_t e = 0; e < entries; ++e) {
            const std::size_t v = ring[e * (size / 2)];
            funcs[v] = combine(funcs[v], BoolExpr::var(up + uniform_below(rng, size)));
        }
    }
    return BooleanNetwork(std::move(names), std::move(funcs));
}

std::string NetworkSource::descriptor() const {
    switch (kind) {
        case Kind::File: return "file:" + path;
        case Kind::Random: return "random:" + std::to_string(n) + ":" + std::to_string(k) + ":" + std::to_string(seed);
        case Kind::Chained:
            return "chained:" + std::to_string(n) + ":" + std::to_string(k) + ":" + std::to_string(seed);
    }
    return {};
}

BooleanNetwork NetworkSource::load() const {
    switch (kind) {
        case Kind::File: return load_network(path);
        case Kind::Random: return random_network(n, k, seed);
        case Kind::Chained: return chained_module_network(n, k, seed);
    }
    throw InternalError("unknown network source");
}

NetworkSource NetworkSource::parse(const std::string& text) {
    NetworkSource src;
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (head == "file" && colon != std::string::npos) {
        src.kind = Kind::File;
        src.path = text.substr(colon + 1);
        return src;
    }
    std::vector<std::uint64_t> nums;
    std::istringstream rest(colon == std::string::npos ? "" : text.substr(colon + 1));
    std::string part;
    while (std::getline(rest, part, ':')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidArgument("bad network source '" + text + "'");
        nums.push_back(std::stoull(part));
    }
    if ((head == "random" || head == "chained") && nums.size() == 3) {
        src.kind = head == "random" ? Kind::Random : Kind::Chained;
        src.n = nums[0];
        src.k = nums[1];
        src.seed = nums[2];
        return src;
    }
    throw InvalidArgument("bad network source '" + text + "' (expected file:PATH, random:N:K:SEED or chained:M:SIZE:SEED)");
}

std::optional<double> PairRecord::speedup() const {
    if (!t_global_ms || !t_decom_ms || *t_decom_ms <= 0.0) return std::nullopt;
    return *t_global_ms / *t_decom_ms;
}

std::string PairRecord::status() const {
    std::string out;
    auto add = [&](bool flag, const char* name) {
        if (!flag) return;
        if (!out.empty()) out += ';';
        out += name;
    };
    add(global_timeout, "global_timeout");
    add(decomp_timeout, "decomp_timeout");
    add(degraded, "degraded");
    add(mismatch, "mismatch");
    return out.empty() ? "ok" : out;
}

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

std::string join_states(const StateSet& s) {
    std::string out;
    for (const auto& bits : s.to_strings()) {
        if (!out.empty()) out += '|';
        out += bits;
    }
    return out;
}

struct Timed {
    std::optional<ControlAnswer> answer;
    std::optional<double> ms;
    bool failed = false;
};

/// One warm-up run, then `reps` timed runs under a fresh deadline each.
template <class Run>
Timed time_method(Run&& run, const TableOptions& options) {
    Timed out;
    std::vector<double> samples;
    const auto budget = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.timeout_s));
    try {
        for (std::size_t rep = 0; rep <= options.reps; ++rep) {
            Limits limits;
            limits.scope_cap = options.scope_cap;
            limits.deadline = Clock::now() + budget;
            const auto t0 = Clock::now();
            ControlAnswer ans = run(limits);
            const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            if (rep > 0) samples.push_back(ms);
            out.answer = std::move(ans);
        }
    } catch (const Timeout&) {
        out.failed = true;
    } catch (const CapExceeded&) {
        out.failed = true;
    }
    if (!out.failed) out.ms = median(samples);
    return out;
}

bool same_answer(const ControlAnswer& a, const ControlAnswer& b) {
    return a.distance == b.distance && a.witness_count == b.witness_count && a.witnesses == b.witnesses;
}

}  // namespace

BenchRecord run_table(const BooleanNetwork& bn, const std::string& descriptor, const TableOptions& options) {
    BenchRecord rec;
    rec.network = descriptor;
    rec.n = bn.size();
    const DepGraph g = dependency_graph(bn);
    const BlockGraph bg = form_blocks(g);
    rec.blocks = bg.size();
    for (const auto& b : bg.blocks) rec.max_block_scope = std::max(rec.max_block_scope, b.vertices.size());

    Limits limits;
    limits.scope_cap = options.scope_cap;
    const Scope full = Scope::full(bn.size());
    std::vector<Attractor> as = attractors(elementary_ts(full.vars(), bn, limits));
    for (std::size_t i = 0; i < as.size(); ++i) {
        rec.attractors.push_back(join_states(as[i].states));
        if (!as[i].singleton()) rec.excluded_sources.push_back(i);
    }

    for (std::size_t s = 0; s < as.size(); ++s) {
        if (!as[s].singleton()) continue;
        for (std::size_t t = 0; t < as.size(); ++t) {
            if (s == t) continue;
            PairRecord p;
            p.source = s;
            p.target = t;
            p.source_state = rec.attractors[s];
            p.target_state = rec.attractors[t];
            rec.pairs.push_back(std::move(p));
        }
    }

    const bool want_global = options.method != TableMethod::Decomp;
    const bool want_decomp = options.method != TableMethod::Global;
    ControlOptions copts;
    copts.witness_cap = 0;

    auto solve = [&](PairRecord& p) {
        const State src{full, *as[p.source].states.min()};
        p.hd = hd_argmin(src, as[p.target].states).distance;
        std::optional<ControlAnswer> ga, da;
        if (want_global) {
            Timed tg = time_method(
                [&](const Limits& lim) {
                    ControlOptions o = copts;
                    o.limits = lim;
                    return global_minimal_control(bn, src, as[p.target], o);
                },
                options);
            p.global_timeout = tg.failed;
            p.t_global_ms = tg.ms;
            ga = std::move(tg.answer);
        }
        if (want_decomp) {
            Timed td = time_method(
                [&](const Limits& lim) {
                    DecompOptions dopts;
                    dopts.limits = lim;
                    Decomposition d(bn, g, dopts);
                    ControlOptions o = copts;
                    o.limits = lim;
                    return decomp_minimal_control(d, src, as[p.target], o);
                },
                options);
            p.decomp_timeout = td.failed;
            p.t_decom_ms = td.ms;
            da = std::move(td.answer);
        }
        const ControlAnswer* any = ga ? &*ga : (da ? &*da : nullptr);
        if (any) {
            p.drivers = any->distance;
            p.witness_count = any->witness_count;
        }
        if (da) p.degraded = da->degraded;
        if (ga && da) p.mismatch = !same_answer(*ga, *da);
    };

    std::size_t workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(rec.pairs.size(), 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rec.pairs.size(); i = next++) {
            try {
                solve(rec.pairs[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rec;
}

BenchReport run_bench(const std::vector<NetworkSource>& sources, const TableOptions& options) {
    BenchReport report;
    for (const auto& src : sources) report.networks.push_back(run_table(src.load(), src.descriptor(), options));
    return report;
}

namespace {

std::string fmt_ms(const std::optional<double>& v) {
    if (!v) return "*";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return buf;
}

std::string fmt_ratio(const std::optional<double>& v) {
    if (!v) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return buf;
}

const PairRecord* find_pair(const BenchRecord& r, std::size_t s, std::size_t t) {
    for (const auto& p : r.pairs)
        if (p.source == s && p.target == t) return &p;
    return nullptr;
}

std::string cell(const BenchRecord& r, std::size_t s, std::size_t t) {
    if (s == t) return "-";
    const PairRecord* p = find_pair(r, s, t);
    if (!p) return "n/a";
    return std::to_string(p->hd) + "," + (p->drivers ? std::to_string(*p->drivers) : std::string("*"));
}

}  // namespace

std::string bench_csv(const BenchReport& report) {
    std::string out = std::string(kBenchCsvHeader) + "\n";
    for (const auto& net : report.networks) {
        for (const auto& p : net.pairs) {
            out += p.source_state + "," + p.target_state + "," + std::to_string(p.hd) + "," +
                   (p.drivers ? std::to_string(*p.drivers) : std::string()) + "," + fmt_ms(p.t_global_ms) + "," +
                   fmt_ms(p.t_decom_ms) + "," + fmt_ratio(p.speedup()) + "," + p.status() + "\n";
        }
    }
    return out;
}

std::string table_csv(const BenchRecord& record) {
    std::string out = "source\\target";
    for (const auto& a : record.attractors) out += "," + a;
    out += "\n";
    for (std::size_t s = 0; s < record.attractors.size(); ++s) {
        out += record.attractors[s];
        for (std::size_t t = 0; t < record.attractors.size(); ++t) out += ",\"" + cell(record, s, t) + "\"";
        out += "\n";
    }
    return out;
}

std::string table_text(const BenchRecord& record) {
    std::size_t width = 6;
    for (const auto& a : record.attractors) width = std::max(width, a.size());
    auto pad = [&](const std::string& s) { return s + std::string(width > s.size() ? width - s.size() : 0, ' '); };
    std::string out = pad("s \\ t");
    for (const auto& a : record.attractors) out += "  " + pad(a);
    out += "\n";
    for (std::size_t s = 0; s < record.attractors.size(); ++s) {
        out += pad(record.attractors[s]);
        for (std::size_t t = 0; t < record.attractors.size(); ++t) out += "  " + pad(cell(record, s, t));
        out += "\n";
    }
    if (!record.excluded_sources.empty())
        out += "note: multi-state attractors are not used as sources (rows marked n/a)\n";
    return out;
}

}  // namespace bnet
