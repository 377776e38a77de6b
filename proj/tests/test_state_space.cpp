#include <doctest.h>

#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/oracle.hpp"
#include "bnet/transition.hpp"
#include "support.hpp"

using namespace bnet;
using test::bits;

namespace {

LocalTS full_ts(const BooleanNetwork& bn) { return LocalTS(bn, StateSet::full(Scope::full(bn.size()))); }

}  // namespace

TEST_CASE("state codes order lexicographically") {
    CHECK(code_from_string("100") == 4);
    CHECK(code_to_string(1, 3) == "001");
    CHECK(code_to_string(0, 0).empty());
    CHECK_THROWS_AS(code_from_string("10x"), InvalidArgument);
    auto s = State::parse(Scope({0, 2, 5}), "011");
    CHECK(s.bit(0) == false);
    CHECK(s.bit(2) == true);
    CHECK_THROWS_AS(State::parse(Scope({0, 1}), "011"), InvalidArgument);
}

TEST_CASE("scope algebra") {
    Scope a({1, 3, 5}), b({3, 4});
    CHECK(a.unite(b) == Scope({1, 3, 4, 5}));
    CHECK(a.intersect(b) == Scope({3}));
    CHECK(a.minus(b) == Scope({1, 5}));
    CHECK(Scope({3}).is_subset_of(a));
    CHECK(*a.position_of(5) == 2);
    CHECK_FALSE(a.position_of(4).has_value());
    CHECK(Scope({5, 1, 3}) == a);
    CHECK_THROWS_AS(Scope({1, 1}), InvalidArgument);
    CHECK_THROWS_AS(Scope::full(65), CapExceeded);
}

TEST_CASE("state set operations on dense and sparse scopes") {
    for (std::size_t width : {3U, 40U}) {
        std::vector<std::size_t> vars(width);
        for (std::size_t i = 0; i < width; ++i) vars[i] = i;
        Scope sc(vars);
        StateSet a(sc), b(sc);
        CHECK(a.dense() == (width <= StateSet::kDenseLimit));
        CHECK(a.insert(1));
        CHECK_FALSE(a.insert(1));
        a.insert(5);
        b.insert(5);
        b.insert(6);
        CHECK(a.unite(b).codes() == std::vector<Code>{1, 5, 6});
        CHECK(a.intersect(b).codes() == std::vector<Code>{5});
        CHECK(a.subtract(b).codes() == std::vector<Code>{1});
        CHECK(a.intersects(b));
        CHECK(a.intersect(b).is_subset_of(a));
        CHECK(*a.min() == 1);
        CHECK(a.erase(1));
        CHECK_FALSE(a.erase(1));
        CHECK(a.size() == 1);
        CHECK_FALSE(StateSet(sc).min().has_value());
    }
    CHECK_THROWS_AS(StateSet(Scope({0})).unite(StateSet(Scope({1}))), InvalidArgument);
    CHECK(StateSet::full(Scope({0, 1, 2})).size() == 8);
}

TEST_CASE("hamming and hd_argmin") {
    Scope sc = Scope::full(4);
    auto s = State::parse(sc, "0000");
    CHECK(hamming(s, State::parse(sc, "1011")) == 3);
    auto target = test::set_of(sc, {"1100", "0011", "1111", "0110"});
    auto hd = hd_argmin(s, target);
    CHECK(hd.distance == 2);
    using Sets = std::vector<std::vector<std::size_t>>;
    CHECK(hd.index_sets == Sets{{0, 1}, {1, 2}, {2, 3}});
    auto self = hd_argmin(s, test::set_of(sc, {"0000"}));
    CHECK(self.distance == 0);
    CHECK(self.index_sets == Sets{{}});
    CHECK_THROWS_AS(hd_argmin(s, StateSet(sc)), InvalidArgument);
}

TEST_CASE("projection and cross") {
    Scope ab({0, 1}), bc({1, 2});
    auto x = test::set_of(ab, {"00", "01", "11"});
    auto y = test::set_of(bc, {"10", "00"});
    auto xy = cross(x, y);
    CHECK(xy.scope() == Scope({0, 1, 2}));
    CHECK(bits(xy) == std::vector<std::string>{"000", "010", "110"});
    CHECK(bits(project(xy, Scope({0}))) == std::vector<std::string>{"0", "1"});
    CHECK(project_state(State::parse(Scope({0, 1, 2}), "101"), Scope({0, 2})).to_string() == "11");
    CHECK(project(xy, Scope()).size() == 1);
    CHECK_THROWS_AS(project(x, Scope({2})), InvalidArgument);

    SUBCASE("disjoint scopes give the product") {
        auto p = cross(test::set_of(Scope({0}), {"1"}), test::set_of(Scope({2}), {"0", "1"}));
        CHECK(bits(p) == std::vector<std::string>{"10", "11"});
    }
    SUBCASE("associativity") {
        Scope cd({2, 3});
        auto z = test::set_of(cd, {"01", "11", "10"});
        CHECK(cross(cross(x, y), z) == cross(x, cross(y, z)));
        CHECK(cross(x, y) == cross(y, x));
    }
    SUBCASE("bit gather permutes positions") {
        BitGather g(Scope({0, 1, 2}), Scope({0, 2}));
        CHECK(g(code_from_string("101")) == code_from_string("11"));
        CHECK(g(code_from_string("010")) == 0);
    }
}

TEST_CASE("transitions of the three-node example") {
    auto bn = test::example_network();
    auto ts = full_ts(bn);
    auto sc = ts.scope();
    auto post = [&](const char* s) { return bits(ts.post_one(State::parse(sc, s))); };
    using V = std::vector<std::string>;
    // post includes the state itself whenever it carries a self-loop
    CHECK(post("000") == V{"000", "100"});
    CHECK(post("010") == V{"000", "010"});
    CHECK(post("011") == V{"001", "011"});
    CHECK(post("001") == V{"001", "101"});
    CHECK(post("111") == V{"110", "111"});
    for (const char* fixed : {"100", "101", "110"}) CHECK(post(fixed) == V{fixed});
    for (Code c = 0; c < 8; ++c) CHECK(ts.has_self_loop(c));
    CHECK(bits(ts.reach(State::parse(sc, "010"))) == V{"000", "010", "100"});
    CHECK(bits(ts.pre_set(test::set_of(sc, {"100"}))) == V{"000", "100"});
}

TEST_CASE("oracle counts edges of the three-node example") {
    auto stg = oracle::oracle_stg(test::example_network());
    CHECK(stg.edge_count() == 13);
    CHECK(stg.self_loop_count() == 8);
    CHECK(stg.edge_count() - stg.self_loop_count() == 5);
}

TEST_CASE("local transition systems reject open scopes and oversize requests") {
    auto bn = test::example_network();
    CHECK_THROWS_AS(LocalTS(bn, StateSet::full(Scope({1, 2}))), InvalidArgument);
    Limits tight;
    tight.scope_cap = 2;
    CHECK_THROWS_AS(LocalTS(bn, StateSet::full(Scope::full(3)), tight), CapExceeded);
    Limits expired;
    expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(expired.check_deadline(), Timeout);
}

TEST_CASE("property: successor sets agree with the oracle graph") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 1 + seed % 8;
        auto bn = random_network(n, std::min<std::size_t>(n, 3), seed);
        auto ts = full_ts(bn);
        auto stg = oracle::oracle_stg(bn);
        for (std::uint32_t s = 0; s < stg.states(); ++s) {
            std::vector<std::string> want;
            for (auto t : stg.succ[s]) want.push_back(stg.label(t));
            std::sort(want.begin(), want.end());
            const auto st = State::parse(ts.scope(), stg.label(s));
            CHECK(bits(ts.post_one(st)) == want);
            const bool self = std::find(stg.succ[s].begin(), stg.succ[s].end(), s) != stg.succ[s].end();
            CHECK(ts.has_self_loop(st.code) == self);
        }
    }
}

TEST_CASE("property: pre and post are dual") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const std::size_t n = 2 + seed % 7;
        auto bn = random_network(n, 2, seed);
        auto ts = full_ts(bn);
        const Code total = Code{1} << n;
        for (Code s = 0; s < total; ++s) {
            ts.for_each_successor(s, [&](Code t) {
                bool found = false;
                ts.for_each_predecessor(t, [&](Code p) { found = found || p == s; });
                CHECK(found);
            });
            ts.for_each_predecessor(s, [&](Code p) {
                bool found = false;
                ts.for_each_successor(p, [&](Code t) { found = found || t == s; });
                CHECK(found);
            });
        }
    }
}

TEST_CASE("property: restricted systems drop transitions leaving the admissible set") {
    auto bn = test::example_network();
    auto sc = Scope::full(3);
    LocalTS ts(bn, test::set_of(sc, {"010", "000", "011"}));
    CHECK(bits(ts.post_one(State::parse(sc, "000"))) == std::vector<std::string>{"000"});
    CHECK(bits(ts.post_one(State::parse(sc, "010"))) == std::vector<std::string>{"000", "010"});
    CHECK_THROWS_AS(ts.post_one(State::parse(sc, "111")), InvalidArgument);
}
