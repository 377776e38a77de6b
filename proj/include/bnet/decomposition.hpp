#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bnet/attractor.hpp"
#include "bnet/network.hpp"
#include "bnet/state.hpp"
#include "bnet/transition.hpp"

namespace bnet {

/**
 * \brief A basic block: a maximal SCC W of the dependency graph plus its parents.
 *
 * All vertex lists are sorted 0-based variable indices. `id` is the block's
 * position in the topological order.
 */
struct Block {
    std::size_t id = 0;
    std::vector<std::size_t> scc;
    std::vector<std::size_t> vertices;       // W ∪ par(W)
    std::vector<std::size_t> parents;        // block ids
    std::vector<std::size_t> ancestors;      // block ids, transitive
    std::vector<std::size_t> control_nodes;  // ∪ (B' ∩ B) over parent blocks B'
    bool elementary = false;                 // no parent blocks
    std::vector<std::size_t> ac;             // ancestor closure
    std::vector<std::size_t> ac_minus;       // ∪ ac(B') over parent blocks B'

    /// Scope of the block's local transition system: the block itself when
    /// elementary, its ancestor closure otherwise.
    const std::vector<std::size_t>& local_vars() const noexcept { return elementary ? vertices : ac; }
};

/// Basic blocks in topological order. Ties go to the smaller minimum vertex.
struct BlockGraph {
    std::vector<Block> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
    const Block& operator[](std::size_t i) const { return blocks.at(i); }
    /// Vertices of B_1 ∪ ... ∪ B_{i+1}.
    std::vector<std::size_t> prefix_union(std::size_t i) const;
};

/// Maximal SCCs of the dependency graph, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const DepGraph& g);

BlockGraph form_blocks(const DepGraph& g);

/// True iff every vertex's parents lie inside `vertices`.
bool is_elementary(const DepGraph& g, const std::vector<std::size_t>& vertices);

/// Projection of a full-network attractor onto the block's vertices.
StateSet decompose_attractor(const Attractor& a, const Block& b);

/// Transition system of an elementary vertex set over all of its states.
LocalTS elementary_ts(const std::vector<std::size_t>& vertices, const BooleanNetwork& bn, const Limits& limits = {});

/// Transition system over `scope` whose states are those projecting into `parent_basin`.
LocalTS block_ts(const Scope& scope, const StateSet& parent_basin, const BooleanNetwork& bn,
                 const Limits& limits = {});

/// Transition system of a non-elementary block generated by a basin over ac(B)⁻.
LocalTS block_ts_from_basin(const Block& b, const StateSet& parent_basin, const BooleanNetwork& bn,
                            const Limits& limits = {});

/// Where a non-elementary block's generating basin comes from.
enum class ParentBasin {
    /// Cross of the local basins of the block's ancestors; TS scope ac(B).
    AncestorClosure,
    /// Basin accumulated over all earlier blocks; TS scope B̄_i.
    CumulativePrefix,
};

struct DecompOptions {
    ParentBasin parent_basin = ParentBasin::AncestorClosure;
    Limits limits;
    /// Fall back to the global fixpoint when a local scope exceeds the cap.
    bool allow_degraded = true;
};

/// One block's step of the decomposition-based basin computation.
struct LocalStep {
    std::size_t block = 0;
    Scope scope;
    StateSet attractor;   // projection of the target onto `scope`
    std::size_t admissible_size = 0;
    StateSet basin;       // local strong basin
};

struct DecompStats {
    bool degraded = false;
    std::size_t max_local_scope = 0;
    std::size_t cache_hits = 0;
};

/**
 * \brief Decomposition-based strong basin computation over a fixed network.
 *
 * Local basins are memoised per (block, projected attractor), so batches of
 * queries against the same network reuse work. Not safe for concurrent use;
 * give each thread its own instance.
 */
class Decomposition {
public:
    Decomposition(BooleanNetwork bn, DepGraph g, DecompOptions options = {});
    explicit Decomposition(BooleanNetwork bn, DecompOptions options = {});

    const BooleanNetwork& network() const noexcept { return bn_; }
    const DepGraph& graph() const noexcept { return graph_; }
    const BlockGraph& blocks() const noexcept { return blocks_; }
    const DecompOptions& options() const noexcept { return options_; }

    /// Strong basin of a global attractor, assembled from local basins.
    StateSet strong_basin(const Attractor& a, DecompStats* stats = nullptr,
                          std::vector<LocalStep>* trace = nullptr);

    /// Largest local transition-system scope this network needs.
    std::size_t max_local_scope() const;

    void clear_cache() { cache_.clear(); }

private:
    std::vector<std::size_t> local_vars(std::size_t i) const;

    BooleanNetwork bn_;
    DepGraph graph_;
    BlockGraph blocks_;
    DecompOptions options_;
    std::map<std::pair<std::size_t, std::vector<Code>>, StateSet> cache_;
};

}  // namespace bnet
