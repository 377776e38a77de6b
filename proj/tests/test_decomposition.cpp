#include <doctest.h>

#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/oracle.hpp"
#include "support.hpp"

using namespace bnet;
using test::bits;
using V = std::vector<std::string>;
using Idx = std::vector<std::size_t>;

namespace {

LocalTS full_ts(const BooleanNetwork& bn) { return LocalTS(bn, StateSet::full(Scope::full(bn.size()))); }

}  // namespace

TEST_CASE("blocks of the three-node example") {
    auto bn = test::example_network();
    auto g = dependency_graph(bn);
    CHECK(strongly_connected_components(g) == std::vector<Idx>{{0, 1}, {2}});
    auto bg = form_blocks(g);
    REQUIRE(bg.size() == 2);
    CHECK(bg[0].vertices == Idx{0, 1});
    CHECK(bg[0].elementary);
    CHECK(bg[0].parents.empty());
    CHECK(bg[1].vertices == Idx{0, 1, 2});
    CHECK_FALSE(bg[1].elementary);
    CHECK(bg[1].parents == Idx{0});
    CHECK(bg[1].ancestors == Idx{0});
    CHECK(bg[1].control_nodes == Idx{0, 1});
    CHECK(bg[1].ac == Idx{0, 1, 2});
    CHECK(bg[1].ac_minus == Idx{0, 1});
    CHECK(bg.prefix_union(0) == Idx{0, 1});
    CHECK(bg.prefix_union(1) == Idx{0, 1, 2});
}

TEST_CASE("local transition systems of the three-node example") {
    auto bn = test::example_network();
    auto bg = form_blocks(dependency_graph(bn));

    auto ts1 = elementary_ts(bg[0].vertices, bn);
    auto as1 = attractors(ts1);
    REQUIRE(as1.size() == 2);
    CHECK(bits(as1[0].states) == V{"10"});
    CHECK(bits(as1[1].states) == V{"11"});
    CHECK(bits(strong_basin(ts1, as1[0])) == V{"00", "01", "10"});
    CHECK(bits(strong_basin(ts1, as1[1])) == V{"11"});

    auto ts2 = block_ts_from_basin(bg[1], strong_basin(ts1, as1[0]), bn);
    CHECK(ts2.admissible().size() == 6);
    auto as2 = attractors(ts2);
    REQUIRE(as2.size() == 2);
    CHECK(bits(as2[0].states) == V{"100"});
    CHECK(bits(as2[1].states) == V{"101"});
    CHECK(bits(strong_basin(ts2, as2[0])) == V{"000", "010", "100"});
}

TEST_CASE("decomposed strong basins of the three-node example") {
    auto bn = test::example_network();
    auto sc = test::full_scope(bn);
    for (auto mode : {ParentBasin::AncestorClosure, ParentBasin::CumulativePrefix}) {
        DecompOptions opts;
        opts.parent_basin = mode;
        Decomposition d(bn, opts);
        std::vector<LocalStep> trace;
        DecompStats stats;
        CHECK(bits(d.strong_basin(test::attractor_of(sc, {"100"}), &stats, &trace)) == V{"000", "010", "100"});
        CHECK_FALSE(stats.degraded);
        CHECK(trace.size() == 2);
        CHECK(bits(d.strong_basin(test::attractor_of(sc, {"101"}))) == V{"001", "011", "101"});
        CHECK(bits(d.strong_basin(test::attractor_of(sc, {"110"}))) == V{"110", "111"});
        CHECK_THROWS_AS(d.strong_basin(test::attractor_of(sc, {"000"})), InvalidArgument);
    }
}

TEST_CASE("decomposition memoises local basins") {
    auto bn = test::example_network();
    auto sc = test::full_scope(bn);
    Decomposition d(bn);
    DecompStats first, second;
    d.strong_basin(test::attractor_of(sc, {"100"}), &first);
    d.strong_basin(test::attractor_of(sc, {"101"}), &second);
    CHECK(second.cache_hits >= 1);
    d.clear_cache();
    DecompStats third;
    d.strong_basin(test::attractor_of(sc, {"101"}), &third);
    CHECK(third.cache_hits == 0);
}

TEST_CASE("oversize local scopes degrade to the global computation") {
    auto bn = test::example_network();
    auto sc = test::full_scope(bn);
    DecompOptions opts;
    opts.limits.scope_cap = 2;
    Decomposition d(bn, opts);
    CHECK(d.max_local_scope() == 3);
    DecompStats stats;
    CHECK_THROWS_AS(d.strong_basin(test::attractor_of(sc, {"100"}), &stats), CapExceeded);
    opts.allow_degraded = false;
    Decomposition strict(bn, opts);
    CHECK_THROWS_AS(strict.strong_basin(test::attractor_of(sc, {"100"})), CapExceeded);

    DecompOptions loose;
    loose.limits.scope_cap = 3;
    Decomposition ok(bn, loose);
    CHECK(bits(ok.strong_basin(test::attractor_of(sc, {"100"}), &stats)) == V{"000", "010", "100"});
}

TEST_CASE("chain network forms one block per variable") {
    auto bn = load_network(test::fixture("chain3.bn"));
    auto bg = form_blocks(dependency_graph(bn));
    REQUIRE(bg.size() == 3);
    CHECK(bg[0].vertices == Idx{0});
    CHECK(bg[1].vertices == Idx{0, 1});
    CHECK(bg[2].vertices == Idx{1, 2});
    CHECK(bg[2].parents == Idx{1});
    CHECK(bg[2].ancestors == Idx{0, 1});
    CHECK(bg[2].control_nodes == Idx{1});
}

TEST_CASE("property: block graph is a topologically ordered DAG covering every variable") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const std::size_t n = 1 + seed % 14;
        auto bn = random_network(n, std::min<std::size_t>(n, 1 + seed % 3), seed * 17 + 11);
        auto g = dependency_graph(bn);
        auto bg = form_blocks(g);
        std::vector<int> covered(n, 0);
        for (const auto& b : bg.blocks) {
            for (auto v : b.scc) covered[v]++;
            for (auto p : b.parents) CHECK(p < b.id);
            CHECK(b.elementary == b.parents.empty());
            if (b.elementary) CHECK(is_elementary(g, b.vertices));
            CHECK(is_elementary(g, b.ac));
            CHECK(is_elementary(g, b.ac_minus));
            CHECK(is_elementary(g, bg.prefix_union(b.id)));
            CHECK(std::includes(b.ac.begin(), b.ac.end(), b.vertices.begin(), b.vertices.end()));
            for (auto v : b.vertices)
                for (auto u : g.parents[v])
                    if (std::binary_search(b.scc.begin(), b.scc.end(), v)) CHECK(std::binary_search(b.vertices.begin(), b.vertices.end(), u));
        }
        for (int c : covered) CHECK(c == 1);
    }
}

TEST_CASE("property: decomposed basins match the global fixpoint") {
    std::size_t multi_block = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 2 + seed % 9;
        auto bn = random_network(n, std::min<std::size_t>(n, 1 + seed % 3), seed * 5 + 2);
        auto ts = full_ts(bn);
        auto as = attractors(ts);
        for (auto mode : {ParentBasin::AncestorClosure, ParentBasin::CumulativePrefix}) {
            DecompOptions opts;
            opts.parent_basin = mode;
            Decomposition d(bn, opts);
            if (mode == ParentBasin::AncestorClosure && d.blocks().size() >= 2) ++multi_block;
            for (const auto& a : as) CHECK(d.strong_basin(a) == strong_basin(ts, a));
        }
    }
    CHECK(multi_block >= 30);
}
