#include "bnet/oracle.hpp"

#include <algorithm>
#include <set>

#include "bnet/error.hpp"

namespace bnet::oracle {

std::size_t ExplicitSTG::edge_count() const {
    std::size_t c = 0;
    for (const auto& s : succ) c += s.size();
    return c;
}

std::size_t ExplicitSTG::self_loop_count() const {
    std::size_t c = 0;
    for (std::uint32_t s = 0; s < succ.size(); ++s)
        c += static_cast<std::size_t>(std::count(succ[s].begin(), succ[s].end(), s));
    return c;
}

std::string ExplicitSTG::label(std::uint32_t s) const {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += ((s >> i) & 1U) ? '1' : '0';
    return out;
}

std::uint32_t ExplicitSTG::index(const std::string& bits) const {
    if (bits.size() != n) throw InvalidArgument("oracle: state '" + bits + "' has the wrong length");
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (bits[i] == '1') s |= 1U << i;
        else if (bits[i] != '0') throw InvalidArgument("oracle: bad state '" + bits + "'");
    }
    return s;
}

namespace {

/// Kosaraju: components come out in topological order of the condensation.
std::vector<std::uint32_t> kosaraju(const std::vector<std::vector<std::uint32_t>>& succ, std::uint32_t& count) {
    const std::size_t n = succ.size();
    std::vector<std::vector<std::uint32_t>> pred(n);
    for (std::uint32_t s = 0; s < n; ++s)
        for (auto t : succ[s]) pred[t].push_back(s);

    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> finish;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
        seen[root] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < succ[v].size()) {
                auto w = succ[v][i++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                finish.push_back(v);
                stack.pop_back();
            }
        }
    }

    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> comp(n, kNone);
    count = 0;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (comp[*it] != kNone) continue;
        std::vector<std::uint32_t> stack{*it};
        comp[*it] = count;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : pred[v])
                if (comp[w] == kNone) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return comp;
}

std::vector<std::string> labels(const ExplicitSTG& stg, const std::vector<std::uint32_t>& states) {
    std::vector<std::string> out;
    for (auto s : states) out.push_back(stg.label(s));
    std::sort(out.begin(), out.end());
    return out;
}

void require_attractor(const ExplicitSTG& stg, std::size_t a) {
    if (a >= stg.attractors.size()) throw InvalidArgument("oracle: attractor index out of range");
}

std::vector<char> backward_closure(const ExplicitSTG& stg, const std::vector<std::uint32_t>& seed) {
    std::vector<std::vector<std::uint32_t>> pred(stg.states());
    for (std::uint32_t s = 0; s < stg.states(); ++s)
        for (auto t : stg.succ[s]) pred[t].push_back(s);
    std::vector<char> in(stg.states(), 0);
    std::vector<std::uint32_t> queue(seed.begin(), seed.end());
    for (auto s : seed) in[s] = 1;
    while (!queue.empty()) {
        auto t = queue.back();
        queue.pop_back();
        for (auto s : pred[t])
            if (!in[s]) {
                in[s] = 1;
                queue.push_back(s);
            }
    }
    return in;
}

}  // namespace

ExplicitSTG oracle_stg(const BooleanNetwork& bn) {
    const std::size_t n = bn.size();
    if (n > kMaxVariables) throw CapExceeded("oracle: networks are limited to " + std::to_string(kMaxVariables) + " variables");
    ExplicitSTG stg;
    stg.n = n;
    const std::uint32_t total = 1U << n;
    stg.succ.resize(total);
    std::vector<bool> state(n);
    for (std::uint32_t s = 0; s < total; ++s) {
        for (std::size_t i = 0; i < n; ++i) state[i] = (s >> i) & 1U;
        std::set<std::uint32_t> next;
        for (std::size_t i = 0; i < n; ++i) {
            const bool v = bn.function(i).eval(state);
            next.insert(v == state[i] ? s : (s ^ (1U << i)));
        }
        stg.succ[s].assign(next.begin(), next.end());
    }

    std::uint32_t comps = 0;
    stg.component = kosaraju(stg.succ, comps);
    std::vector<std::vector<std::uint32_t>> members(comps);
    std::vector<char> bottom(comps, 1);
    for (std::uint32_t s = 0; s < total; ++s) {
        members[stg.component[s]].push_back(s);
        for (auto t : stg.succ[s])
            if (stg.component[t] != stg.component[s]) bottom[stg.component[s]] = 0;
    }
    std::vector<std::pair<std::string, std::uint32_t>> order;
    for (std::uint32_t c = 0; c < comps; ++c)
        if (bottom[c]) order.emplace_back(labels(stg, members[c]).front(), c);
    std::sort(order.begin(), order.end());
    std::vector<std::uint32_t> attractor_of(comps, ~std::uint32_t{0});
    for (const auto& [label, c] : order) {
        attractor_of[c] = static_cast<std::uint32_t>(stg.attractors.size());
        stg.attractors.push_back(members[c]);
    }

    // Components are in topological order, so walk them backwards.
    std::vector<std::set<std::uint32_t>> reach(comps);
    for (std::uint32_t c = comps; c-- > 0;) {
        if (bottom[c]) {
            reach[c].insert(attractor_of[c]);
            continue;
        }
        for (auto s : members[c])
            for (auto t : stg.succ[s])
                if (stg.component[t] != c) reach[c].insert(reach[stg.component[t]].begin(), reach[stg.component[t]].end());
    }
    stg.reachable.resize(total);
    for (std::uint32_t s = 0; s < total; ++s) {
        const auto& r = reach[stg.component[s]];
        stg.reachable[s].assign(r.begin(), r.end());
    }
    return stg;
}

std::vector<std::vector<std::string>> oracle_attractors(const ExplicitSTG& stg) {
    std::vector<std::vector<std::string>> out;
    for (const auto& a : stg.attractors) out.push_back(labels(stg, a));
    return out;
}

std::size_t find_attractor(const ExplicitSTG& stg, const std::vector<std::string>& states) {
    std::vector<std::string> want = states;
    std::sort(want.begin(), want.end());
    for (std::size_t a = 0; a < stg.attractors.size(); ++a)
        if (labels(stg, stg.attractors[a]) == want) return a;
    throw InvalidArgument("oracle: no attractor with the given states");
}

std::vector<std::string> oracle_weak_basin(const ExplicitSTG& stg, std::size_t attractor) {
    require_attractor(stg, attractor);
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < stg.states(); ++s) {
        const auto& r = stg.reachable[s];
        if (std::find(r.begin(), r.end(), attractor) != r.end()) out.push_back(s);
    }
    return labels(stg, out);
}

std::vector<std::string> oracle_strong_basin(const ExplicitSTG& stg, std::size_t attractor) {
    require_attractor(stg, attractor);
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < stg.states(); ++s)
        if (stg.reachable[s].size() == 1 && stg.reachable[s].front() == attractor) out.push_back(s);
    return labels(stg, out);
}

std::vector<std::string> oracle_strong_basin_by_subtraction(const ExplicitSTG& stg, std::size_t attractor) {
    require_attractor(stg, attractor);
    std::vector<char> keep = backward_closure(stg, stg.attractors[attractor]);
    for (std::size_t other = 0; other < stg.attractors.size(); ++other) {
        if (other == attractor) continue;
        auto weak = backward_closure(stg, stg.attractors[other]);
        for (std::size_t s = 0; s < keep.size(); ++s)
            if (weak[s]) keep[s] = 0;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < keep.size(); ++s)
        if (keep[s]) out.push_back(s);
    return labels(stg, out);
}

MinimalControls oracle_minimal_controls(const ExplicitSTG& stg, const std::string& source, std::size_t attractor) {
    require_attractor(stg, attractor);
    const std::uint32_t s = stg.index(source);
    std::vector<char> in_basin(stg.states(), 0);
    for (const auto& label : oracle_strong_basin(stg, attractor)) in_basin[stg.index(label)] = 1;

    MinimalControls out;
    for (std::size_t d = 0; d <= stg.n; ++d) {
        // Every size-d subset of {0..n-1}, generated in lexicographic order.
        std::vector<std::size_t> pick(d);
        for (std::size_t i = 0; i < d; ++i) pick[i] = i;
        while (true) {
            std::uint32_t flipped = s;
            for (auto i : pick) flipped ^= 1U << i;
            if (in_basin[flipped]) out.witnesses.push_back(pick);
            std::size_t i = d;
            while (i > 0 && pick[i - 1] == stg.n - d + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!out.witnesses.empty()) {
            out.distance = d;
            return out;
        }
    }
    throw InvalidArgument("oracle: the target has an empty strong basin");
}

}  // namespace bnet::oracle
