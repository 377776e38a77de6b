#include "bnet/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "bnet/error.hpp"

namespace bnet {

namespace {

using VertexSet = std::vector<std::size_t>;

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) { return !set_intersection(a, b).empty(); }

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const DepGraph& g) {
    const std::size_t n = g.n;
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    std::size_t counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (std::size_t w : g.children[v]) {
            if (index[w] == kUnvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == kUnvisited) visit(v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool is_elementary(const DepGraph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t v : vertices)
        for (std::size_t p : g.parents.at(v))
            if (!std::binary_search(vertices.begin(), vertices.end(), p)) return false;
    return true;
}

BlockGraph form_blocks(const DepGraph& g) {
    const auto sccs = strongly_connected_components(g);
    const std::size_t k = sccs.size();

    std::vector<VertexSet> vertices(k), scc_parents(k);
    for (std::size_t b = 0; b < k; ++b) {
        VertexSet par;
        for (std::size_t v : sccs[b]) par = set_union(par, g.parents[v]);
        vertices[b] = set_union(sccs[b], par);
        std::set_difference(par.begin(), par.end(), sccs[b].begin(), sccs[b].end(), std::back_inserter(scc_parents[b]));
    }

    // B' -> B iff B's SCC reads a vertex of B''s SCC.
    std::vector<std::vector<std::size_t>> parents(k), children(k);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t p = 0; p < k; ++p)
            if (p != b && intersects(sccs[p], scc_parents[b])) {
                parents[b].push_back(p);
                children[p].push_back(b);
            }

    // Kahn's algorithm; among ready blocks pick the smallest (min vertex, min SCC vertex).
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    std::vector<std::size_t> indegree(k);
    for (std::size_t b = 0; b < k; ++b) {
        indegree[b] = parents[b].size();
        if (indegree[b] == 0) ready.emplace(vertices[b].front(), sccs[b].front(), b);
    }
    std::vector<std::size_t> order, position(k);
    while (!ready.empty()) {
        auto [v0, w0, b] = ready.top();
        ready.pop();
        position[b] = order.size();
        order.push_back(b);
        for (std::size_t c : children[b])
            if (--indegree[c] == 0) ready.emplace(vertices[c].front(), sccs[c].front(), c);
    }
    if (order.size() != k) throw InternalError("block graph is not acyclic");

    BlockGraph bg;
    bg.blocks.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t b = order[i];
        Block& blk = bg.blocks[i];
        blk.id = i;
        blk.scc = sccs[b];
        blk.vertices = vertices[b];
        for (std::size_t p : parents[b]) blk.parents.push_back(position[p]);
        std::sort(blk.parents.begin(), blk.parents.end());
        // A block fed by another block depends on that block's dynamics.
        blk.elementary = blk.parents.empty();
    }
    for (Block& blk : bg.blocks) {
        VertexSet ancestors;
        for (std::size_t p : blk.parents) {
            const Block& parent = bg.blocks[p];
            blk.ac_minus = set_union(blk.ac_minus, parent.ac);
            blk.control_nodes = set_union(blk.control_nodes, set_intersection(parent.vertices, blk.vertices));
            ancestors = set_union(ancestors, parent.ancestors);
            ancestors = set_union(ancestors, VertexSet{p});
        }
        blk.ancestors = std::move(ancestors);
        blk.ac = set_union(blk.vertices, blk.ac_minus);
    }
    return bg;
}

std::vector<std::size_t> BlockGraph::prefix_union(std::size_t i) const {
    VertexSet out;
    for (std::size_t j = 0; j <= i && j < blocks.size(); ++j) out = set_union(out, blocks[j].vertices);
    return out;
}

StateSet decompose_attractor(const Attractor& a, const Block& b) {
    return project(a.states, Scope(b.vertices));
}

LocalTS elementary_ts(const std::vector<std::size_t>& vertices, const BooleanNetwork& bn, const Limits& limits) {
    const Scope scope(vertices);
    for (std::size_t v : scope)
        for (std::size_t input : bn.compiled(v).inputs)
            if (!scope.contains(input))
                throw InvalidArgument("vertex set is not elementary: '" + bn.name(v) + "' reads '" + bn.name(input) + "'");
    limits.check_scope(scope.size());
    return LocalTS(bn, StateSet::full(scope), limits);
}

LocalTS block_ts(const Scope& scope, const StateSet& parent_basin, const BooleanNetwork& bn, const Limits& limits) {
    if (parent_basin.empty()) throw InvalidArgument("block transition system: generating basin is empty");
    if (!parent_basin.scope().is_subset_of(scope))
        throw InvalidArgument("block transition system: basin scope is not inside the block scope");
    limits.check_scope(scope.size());
    const Scope free_vars = scope.minus(parent_basin.scope());
    StateSet admissible = free_vars.empty() ? parent_basin : cross(parent_basin, StateSet::full(free_vars));
    return LocalTS(bn, std::move(admissible), limits);
}

LocalTS block_ts_from_basin(const Block& b, const StateSet& parent_basin, const BooleanNetwork& bn,
                            const Limits& limits) {
    if (b.elementary) throw InvalidArgument("block_ts_from_basin: block is elementary");
    if (parent_basin.scope() != Scope(b.ac_minus))
        throw InvalidArgument("block_ts_from_basin: basin must be over ac(B)⁻");
    return block_ts(Scope(b.ac), parent_basin, bn, limits);
}

// ---------------------------------------------------------------------------

Decomposition::Decomposition(BooleanNetwork bn, DepGraph g, DecompOptions options)
    : bn_(std::move(bn)), graph_(std::move(g)), blocks_(form_blocks(graph_)), options_(options) {
    if (graph_.n != bn_.size()) throw InvalidArgument("dependency graph does not match the network");
}

Decomposition::Decomposition(BooleanNetwork bn, DecompOptions options)
    : Decomposition(bn, dependency_graph(bn), options) {}

std::vector<std::size_t> Decomposition::local_vars(std::size_t i) const {
    const Block& b = blocks_[i];
    if (b.elementary || options_.parent_basin == ParentBasin::AncestorClosure) return b.local_vars();
    return blocks_.prefix_union(i);
}

std::size_t Decomposition::max_local_scope() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) m = std::max(m, local_vars(i).size());
    return m;
}

StateSet Decomposition::strong_basin(const Attractor& a, DecompStats* stats, std::vector<LocalStep>* trace) {
    const Scope all = Scope::full(bn_.size());
    if (a.scope() != all) throw InvalidArgument("decomposition: attractor must range over the full network");
    if (!is_network_attractor(bn_, a.states)) throw InvalidArgument("decomposition: target is not an attractor");
    DecompStats local_stats;
    local_stats.max_local_scope = max_local_scope();

    if (local_stats.max_local_scope > options_.limits.scope_cap) {
        if (!options_.allow_degraded)
            throw CapExceeded("state space too large: a block needs " + std::to_string(local_stats.max_local_scope) +
                              " variables, cap is " + std::to_string(options_.limits.scope_cap));
        local_stats.degraded = true;
        LocalTS global = elementary_ts(all.vars(), bn_, options_.limits);
        StateSet sb = bnet::strong_basin(global, a);
        if (stats) *stats = local_stats;
        return sb;
    }

    const std::size_t k = blocks_.size();
    std::vector<StateSet> local_basins(k);
    std::optional<StateSet> accumulated;

    for (std::size_t i = 0; i < k; ++i) {
        options_.limits.check_deadline();
        const Block& blk = blocks_[i];
        const Scope scope(local_vars(i));
        StateSet projected = project(a.states, scope);
        auto key = std::make_pair(i, projected.codes());

        if (auto hit = cache_.find(key); hit != cache_.end()) {
            ++local_stats.cache_hits;
            local_basins[i] = hit->second;
            if (trace) trace->push_back(LocalStep{i, scope, projected, 0, hit->second});
        } else {
            std::optional<LocalTS> ts;
            if (blk.elementary) {
                ts.emplace(elementary_ts(blk.vertices, bn_, options_.limits));
            } else if (options_.parent_basin == ParentBasin::AncestorClosure) {
                std::optional<StateSet> parent;
                for (std::size_t j : blk.ancestors)
                    parent = parent ? cross(*parent, local_basins[j]) : local_basins[j];
                ts.emplace(block_ts(scope, project(*parent, Scope(blk.ac_minus)), bn_, options_.limits));
            } else {
                ts.emplace(block_ts(scope, *accumulated, bn_, options_.limits));
            }
            if (!is_attractor(*ts, projected))
                throw InternalError("projection of the target onto block " + std::to_string(i) +
                                    " is not an attractor of its local transition system");
            StateSet basin = bnet::strong_basin(*ts, Attractor{projected});
            if (trace) trace->push_back(LocalStep{i, scope, projected, ts->admissible().size(), basin});
            local_basins[i] = basin;
            cache_.emplace(std::move(key), std::move(basin));
        }
        accumulated = accumulated ? cross(*accumulated, local_basins[i]) : local_basins[i];
    }

    if (stats) *stats = local_stats;
    return *accumulated;
}

}  // namespace bnet
