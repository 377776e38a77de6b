#include <doctest.h>

#include "bnet/error.hpp"
#include "bnet/oracle.hpp"
#include "support.hpp"

using namespace bnet;
using V = std::vector<std::string>;

TEST_CASE("oracle on the three-node example") {
    auto stg = oracle::oracle_stg(test::example_network());
    CHECK(stg.states() == 8);
    CHECK(oracle::oracle_attractors(stg) == std::vector<V>{{"100"}, {"101"}, {"110"}});
    const auto a = oracle::find_attractor(stg, {"110"});
    CHECK(a == 2);
    CHECK(oracle::oracle_strong_basin(stg, 0) == V{"000", "010", "100"});
    CHECK(oracle::oracle_strong_basin(stg, 1) == V{"001", "011", "101"});
    CHECK(oracle::oracle_strong_basin(stg, a) == V{"110", "111"});
    CHECK(oracle::oracle_weak_basin(stg, a) == V{"110", "111"});
    auto mc = oracle::oracle_minimal_controls(stg, "101", a);
    CHECK(mc.distance == 1);
    CHECK(mc.witnesses == std::vector<std::vector<std::size_t>>{{1}});
}

TEST_CASE("oracle weak and strong basins differ when basins overlap") {
    // a, a | b  and b, !b oscillates b; a=1 is absorbing, a=0 can still reach it
    auto bn = parse_network("a, a | b\nb, !b");
    auto stg = oracle::oracle_stg(bn);
    REQUIRE(oracle::oracle_attractors(stg) == std::vector<V>{{"10", "11"}});
    CHECK(oracle::oracle_strong_basin(stg, 0).size() == 4);

    // 01 and 10 can each move to 00 or to 11
    auto two = oracle::oracle_stg(parse_network("x, y\ny, x"));
    CHECK(oracle::oracle_attractors(two) == std::vector<V>{{"00"}, {"11"}});
    CHECK(oracle::oracle_weak_basin(two, 0) == V{"00", "01", "10"});
    CHECK(oracle::oracle_strong_basin(two, 0) == V{"00"});
    CHECK(oracle::oracle_strong_basin_by_subtraction(two, 1) == V{"11"});
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(oracle::oracle_stg(random_network(15, 1, 0)), CapExceeded);
    auto stg = oracle::oracle_stg(test::example_network());
    CHECK_THROWS_AS(oracle::oracle_weak_basin(stg, 9), InvalidArgument);
    CHECK_THROWS_AS(oracle::find_attractor(stg, {"000"}), InvalidArgument);
    CHECK_THROWS_AS(stg.index("10"), InvalidArgument);
}

TEST_CASE("pinned oracle graph of a small random network") {
    auto stg = oracle::oracle_stg(random_network(5, 2, 3));
    CHECK(stg.states() == 32);
    CHECK(stg.edge_count() == 111);
    CHECK(stg.self_loop_count() == 31);
    CHECK(stg.attractors.size() == 2);
}
