#include <doctest.h>

#include "bnet/attractor.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/oracle.hpp"
#include "support.hpp"

using namespace bnet;
using test::bits;
using V = std::vector<std::string>;

namespace {

LocalTS full_ts(const BooleanNetwork& bn) { return LocalTS(bn, StateSet::full(Scope::full(bn.size()))); }

std::vector<V> attractor_bits(const std::vector<Attractor>& as) {
    std::vector<V> out;
    for (const auto& a : as) out.push_back(bits(a.states));
    return out;
}

}  // namespace

TEST_CASE("attractors and basins of the three-node example") {
    auto bn = test::example_network();
    auto ts = full_ts(bn);
    auto as = attractors(ts);
    REQUIRE(attractor_bits(as) == std::vector<V>{{"100"}, {"101"}, {"110"}});

    CHECK(bits(weak_basin(ts, as[0])) == V{"000", "010", "100"});
    CHECK(bits(weak_basin(ts, as[1])) == V{"001", "011", "101"});
    CHECK(bits(weak_basin(ts, as[2])) == V{"110", "111"});

    StrongBasinStats stats;
    CHECK(bits(strong_basin(ts, as[0], &stats)) == V{"000", "010", "100"});
    CHECK(stats.weak_size == 3);
    CHECK(stats.iterations >= 1);
    CHECK(stats.iterations <= stats.weak_size);
    CHECK(bits(strong_basin(ts, as[1])) == V{"001", "011", "101"});
    CHECK(bits(strong_basin(ts, as[2])) == V{"110", "111"});
}

TEST_CASE("a single F step removes exactly the leaking states") {
    auto bn = test::example_network();
    auto ts = full_ts(bn);
    auto sc = ts.scope();
    // 000 leaks to 100, 010 stays inside
    CHECK(bits(f_step(ts, test::set_of(sc, {"000", "010"}))) == V{"010"});
    CHECK(bits(f_step(ts, test::set_of(sc, {"000", "010", "100"}))) == V{"000", "010", "100"});
    CHECK(f_step(ts, StateSet(sc)).empty());
}

TEST_CASE("oscillating attractor") {
    auto bn = load_network(test::fixture("toggle.bn"));
    auto ts = full_ts(bn);
    auto as = attractors(ts);
    REQUIRE(as.size() == 1);
    CHECK(bits(as[0].states) == V{"0", "1"});
    CHECK(bits(strong_basin(ts, as[0])) == V{"0", "1"});
    CHECK(is_attractor(ts, as[0].states));
    CHECK_FALSE(is_attractor(ts, test::set_of(ts.scope(), {"0"})));
}

TEST_CASE("two independent modules multiply their fixed points") {
    // each module has fixed points {00, 10, 11} and {00, 01, 11} respectively
    auto bn = load_network(test::fixture("two_switches.bn"));
    auto as = attractors(full_ts(bn));
    std::vector<V> want;
    for (const char* pq : {"00", "10", "11"})
        for (const char* rs : {"00", "01", "11"}) want.push_back({std::string(pq) + rs});
    std::sort(want.begin(), want.end());
    CHECK(attractor_bits(as) == want);
}

TEST_CASE("is_attractor rejects non-closed and disconnected sets") {
    auto bn = test::example_network();
    auto ts = full_ts(bn);
    auto sc = ts.scope();
    CHECK(is_attractor(ts, test::set_of(sc, {"100"})));
    CHECK_FALSE(is_attractor(ts, test::set_of(sc, {"000"})));
    CHECK_FALSE(is_attractor(ts, test::set_of(sc, {"100", "101"})));
    CHECK_FALSE(is_attractor(ts, StateSet(sc)));
    CHECK(is_network_attractor(bn, test::set_of(sc, {"110"})));
    CHECK_FALSE(is_network_attractor(bn, test::set_of(sc, {"111"})));
}

TEST_CASE("property: both attractor searches agree with the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 1 + seed % 10;
        auto bn = random_network(n, std::min<std::size_t>(n, 2 + seed % 2), seed * 7 + 1);
        auto ts = full_ts(bn);
        auto tarjan = attractors(ts, AttractorMethod::Tarjan);
        auto fb = attractors(ts, AttractorMethod::ForwardBackward, seed);
        auto stg = oracle::oracle_stg(bn);
        CHECK(attractor_bits(tarjan) == oracle::oracle_attractors(stg));
        CHECK(attractor_bits(fb) == attractor_bits(tarjan));
        for (const auto& a : tarjan) CHECK(is_attractor(ts, a.states));
    }
}

TEST_CASE("property: the F fixpoint is the strong basin") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 9;
        auto bn = random_network(n, std::min<std::size_t>(n, 2 + seed % 3), seed * 13 + 3);
        auto ts = full_ts(bn);
        auto stg = oracle::oracle_stg(bn);
        auto as = attractors(ts);
        StateSet seen(ts.scope());
        for (std::size_t a = 0; a < as.size(); ++a) {
            StrongBasinStats stats;
            auto sb = strong_basin(ts, as[a], &stats);
            CHECK(bits(sb) == oracle::oracle_strong_basin(stg, a));
            CHECK(bits(sb) == oracle::oracle_strong_basin_by_subtraction(stg, a));
            CHECK(bits(weak_basin(ts, as[a])) == oracle::oracle_weak_basin(stg, a));
            CHECK(as[a].states.is_subset_of(sb));
            CHECK(stats.iterations <= stats.weak_size);
            CHECK(f_step(ts, sb) == sb);
            CHECK_FALSE(seen.intersects(sb));
            seen = seen.unite(sb);
        }
    }
}
