#include "bnet/attractor.hpp"

#include <algorithm>
#include <random>

#include "bnet/error.hpp"

namespace bnet {

namespace {

std::vector<Attractor> sorted(std::vector<Attractor> out) {
    std::sort(out.begin(), out.end(),
              [](const Attractor& a, const Attractor& b) { return *a.states.min() < *b.states.min(); });
    return out;
}

/// Iterative Tarjan over the admissible states, keeping only bottom components.
std::vector<Attractor> attractors_tarjan(const LocalTS& ts) {
    const std::vector<Code> codes = ts.admissible().codes();
    const std::size_t n = codes.size();
    auto index_of = [&](Code c) {
        return static_cast<std::size_t>(std::lower_bound(codes.begin(), codes.end(), c) - codes.begin());
    };
    std::vector<std::vector<std::uint32_t>> succ(n);
    for (std::size_t v = 0; v < n; ++v) {
        ts.for_each_successor(codes[v], [&](Code t) { succ[v].push_back(static_cast<std::uint32_t>(index_of(t))); });
        if ((v & 0xFFFF) == 0) ts.limits().check_deadline();
    }

    constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> call;  // (vertex, next edge)
    std::uint32_t counter = 0, comps = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(static_cast<std::uint32_t>(root), 0);
        index[root] = low[root] = counter++;
        stack.push_back(static_cast<std::uint32_t>(root));
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < succ[v].size()) {
                const std::uint32_t w = succ[v][next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::uint32_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != done);
                ++comps;
            }
        }
    }

    std::vector<std::uint8_t> bottom(comps, 1);
    for (std::size_t v = 0; v < n; ++v)
        for (auto w : succ[v])
            if (comp[w] != comp[v]) bottom[comp[v]] = 0;

    std::vector<std::vector<Code>> members(comps);
    for (std::size_t v = 0; v < n; ++v)
        if (bottom[comp[v]]) members[comp[v]].push_back(codes[v]);
    std::vector<Attractor> out;
    for (std::uint32_t c = 0; c < comps; ++c)
        if (bottom[c]) out.push_back(Attractor{StateSet::of(ts.scope(), std::move(members[c]))});
    return sorted(std::move(out));
}

Code pick(const StateSet& set, std::mt19937_64& rng) {
    std::uint64_t k = uniform_below(rng, set.size());
    Code chosen = 0;
    bool found = false;
    set.for_each([&](Code c) {
        if (!found && k-- == 0) {
            chosen = c;
            found = true;
        }
    });
    return chosen;
}

/// Forward/backward closure search. A random walk first descends towards a
/// bottom component; the forward set of the landing state is an attractor iff
/// every member reaches back to it. Otherwise the members that cannot reach
/// back form a smaller closed region to search next.
std::vector<Attractor> attractors_forward_backward(const LocalTS& ts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    StateSet remaining = ts.admissible();
    StateSet region(ts.scope());
    std::vector<Attractor> out;
    std::vector<Code> next;
    while (!remaining.empty()) {
        ts.limits().check_deadline();
        Code walker = pick(region.empty() ? remaining : region, rng);
        for (std::size_t step = 0; step < 64 * ts.width() + 64; ++step) {
            next.clear();
            ts.for_each_successor(walker, [&](Code t) { next.push_back(t); });
            if (next.empty()) break;
            walker = next[uniform_below(rng, next.size())];
        }
        StateSet start(ts.scope());
        start.insert(walker);
        const StateSet fwd = ts.reach_set(start);

        StateSet back = start;
        std::vector<Code> frontier{walker};
        while (!frontier.empty()) {
            const Code t = frontier.back();
            frontier.pop_back();
            ts.for_each_predecessor(t, [&](Code s) {
                if (fwd.contains(s) && !back.contains(s)) {
                    back.insert(s);
                    frontier.push_back(s);
                }
            });
        }
        if (back.size() == fwd.size()) {
            out.push_back(Attractor{fwd});
            remaining = remaining.subtract(ts.back_reach_set(fwd));
            region = StateSet(ts.scope());
        } else {
            region = fwd.subtract(back);
        }
    }
    return sorted(std::move(out));
}

}  // namespace

std::vector<Attractor> attractors(const LocalTS& ts, AttractorMethod method, std::uint64_t seed) {
    if (ts.admissible().empty()) throw InvalidArgument("attractors: the transition system has no states");
    if (method == AttractorMethod::Auto)
        method = ts.admissible().size() <= kTarjanStateLimit ? AttractorMethod::Tarjan : AttractorMethod::ForwardBackward;
    return method == AttractorMethod::Tarjan ? attractors_tarjan(ts) : attractors_forward_backward(ts, seed);
}

bool is_attractor(const LocalTS& ts, const StateSet& set) {
    if (set.empty() || set.scope() != ts.scope() || !set.is_subset_of(ts.admissible())) return false;
    // Closure is judged on the raw transition relation, so a transition that
    // leaves the admissible states also disqualifies the set.
    const std::size_t width = ts.width();
    bool closed = true;
    set.for_each([&](Code s) {
        for (std::size_t pos = 0; closed && pos < width; ++pos) {
            const Code m = code_mask(width, pos);
            if (ts.update_value(pos, s) != ((s & m) != 0) && !set.contains(s ^ m)) closed = false;
        }
    });
    if (!closed) return false;

    const Code anchor = *set.min();
    auto restricted_search = [&](bool forward) {
        StateSet seen(ts.scope());
        seen.insert(anchor);
        std::vector<Code> stack{anchor};
        while (!stack.empty()) {
            const Code c = stack.back();
            stack.pop_back();
            auto visit = [&](Code n) {
                if (set.contains(n) && seen.insert(n)) stack.push_back(n);
            };
            if (forward) ts.for_each_successor(c, visit);
            else ts.for_each_predecessor(c, visit);
        }
        return seen.size() == set.size();
    };
    return restricted_search(true) && restricted_search(false);
}

bool is_network_attractor(const BooleanNetwork& bn, const StateSet& set) {
    if (set.scope() != Scope::full(bn.size())) return false;
    Limits wide;
    wide.scope_cap = Scope::kMaxSize;
    return is_attractor(LocalTS(bn, set, wide), set);
}

StateSet weak_basin(const LocalTS& ts, const Attractor& a) {
    if (a.scope() != ts.scope() || !a.states.is_subset_of(ts.admissible()))
        throw InvalidArgument("weak_basin: attractor is not within the transition system");
    return ts.back_reach_set(a.states);
}

StateSet f_step(const LocalTS& ts, const StateSet& t) {
    if (t.scope() != ts.scope()) throw InvalidArgument("f_step: set has a different scope");
    StateSet out = t;
    t.for_each([&](Code s) {
        bool leaves = false;
        ts.for_each_successor(s, [&](Code u) {
            if (!t.contains(u)) leaves = true;
        });
        if (leaves) out.erase(s);
    });
    return out;
}

StateSet strong_basin(const LocalTS& ts, const Attractor& a, StrongBasinStats* stats) {
    StateSet current = weak_basin(ts, a);
    const std::size_t weak_size = current.size();

    // Iterate T <- F(T). After the first application only predecessors of the
    // states just removed can start to leave T, so each round re-examines those.
    std::vector<Code> candidates = current.codes();
    std::size_t iterations = 0;
    while (true) {
        ts.limits().check_deadline();
        ++iterations;
        std::vector<Code> removed;
        for (Code s : candidates) {
            if (!current.contains(s)) continue;
            bool leaves = false;
            ts.for_each_successor(s, [&](Code u) {
                if (!current.contains(u)) leaves = true;
            });
            if (leaves) removed.push_back(s);
        }
        if (removed.empty()) break;
        for (Code s : removed) current.erase(s);
        candidates.clear();
        for (Code s : removed)
            ts.for_each_predecessor(s, [&](Code p) {
                if (current.contains(p)) candidates.push_back(p);
            });
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    if (iterations > weak_size) throw InternalError("strong basin fixpoint exceeded its iteration bound");
    if (!a.states.is_subset_of(current))
        throw InternalError("strong basin lost attractor states: the given set is not an attractor");
    if (stats) *stats = StrongBasinStats{weak_size, iterations};
    return current;
}

}  // namespace bnet
