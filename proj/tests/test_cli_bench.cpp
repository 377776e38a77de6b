#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bnet/bench.hpp"
#include "bnet/cli.hpp"
#include "bnet/decomposition.hpp"
#include "bnet/error.hpp"
#include "bnet/report.hpp"
#include "support.hpp"

using namespace bnet;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TableOptions quick() {
    TableOptions t;
    t.reps = 1;
    t.workers = 2;
    return t;
}

const PairRecord& pair(const BenchRecord& r, std::size_t s, std::size_t t) {
    for (const auto& p : r.pairs)
        if (p.source == s && p.target == t) return p;
    FAIL("missing pair");
    throw;
}

}  // namespace

TEST_CASE("chained-module family") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto bn = chained_module_network(3, 6, seed);
        CHECK(bn.size() == 18);
        auto bg = form_blocks(dependency_graph(bn));
        REQUIRE(bg.size() == 3);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(bg[j].scc.size() == 6);
            CHECK(bg[j].vertices.size() <= 8);
            CHECK(bg[j].parents == (j == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{j - 1}));
        }
        CHECK(to_text(bn) == to_text(chained_module_network(3, 6, seed)));
    }
    auto six = form_blocks(dependency_graph(chained_module_network(6, 3, 1)));
    CHECK(six.size() == 6);
    CHECK_THROWS_AS(chained_module_network(0, 3, 0), InvalidArgument);
}

TEST_CASE("network sources") {
    CHECK(NetworkSource::parse("random:5:2:3").descriptor() == "random:5:2:3");
    CHECK(NetworkSource::parse("chained:3:4:9").kind == NetworkSource::Kind::Chained);
    CHECK(NetworkSource::parse("file:a/b.bn").path == "a/b.bn");
    CHECK_THROWS_AS(NetworkSource::parse("random:5:x:3"), InvalidArgument);
    CHECK_THROWS_AS(NetworkSource::parse("random:5:2"), InvalidArgument);
    CHECK(NetworkSource::parse("random:5:2:3").load() == random_network(5, 2, 3));
}

TEST_CASE("control table of the three-node example") {
    auto rec = run_table(test::example_network(), "example", quick());
    CHECK(rec.attractors == std::vector<std::string>{"100", "101", "110"});
    CHECK(rec.pairs.size() == 6);
    CHECK(rec.blocks == 2);
    const auto& p = pair(rec, 1, 2);
    CHECK(p.hd == 2);
    CHECK(*p.drivers == 1);
    CHECK(p.status() == "ok");
    CHECK(p.speedup().has_value());
    for (const auto& q : rec.pairs) CHECK_FALSE(q.mismatch);
    const auto text = table_text(rec);
    CHECK(text.find("2,1") != std::string::npos);
}

TEST_CASE("single-attractor network gives a 1x1 table of dashes") {
    auto rec = run_table(load_network(test::fixture("toggle.bn")), "toggle", quick());
    CHECK(rec.attractors == std::vector<std::string>{"0|1"});
    CHECK(rec.pairs.empty());
    CHECK(rec.excluded_sources == std::vector<std::size_t>{0});
    CHECK(table_csv(rec) == "source\\target,0|1\n0|1,\"-\"\n");
}

TEST_CASE("tables are deterministic per seed") {
    auto bn = random_network(12, 2, 42);
    auto a = run_table(bn, "r", quick());
    auto b = run_table(random_network(12, 2, 42), "r", quick());
    CHECK(table_csv(a) == table_csv(b));
    TableOptions t = quick();
    CHECK(report::without_timings(report::bench_json(BenchReport{{a}}, t)) ==
          report::without_timings(report::bench_json(BenchReport{{b}}, t)));
}

TEST_CASE("timeouts are recorded per pair") {
    TableOptions t = quick();
    t.timeout_s = 0.0;
    auto rec = run_table(load_network(test::fixture("two_switches.bn")), "sw", t);
    REQUIRE_FALSE(rec.pairs.empty());
    for (const auto& p : rec.pairs) {
        CHECK(p.global_timeout);
        CHECK(p.decomp_timeout);
        CHECK(p.status() == "global_timeout;decomp_timeout");
        CHECK_FALSE(p.speedup().has_value());
    }
    CHECK(bench_csv(BenchReport{{rec}}).find(",*,*,,") != std::string::npos);
}

TEST_CASE("bench report formats") {
    CHECK(bench_csv(BenchReport{}) == std::string(kBenchCsvHeader) + "\n");
    auto rep = run_bench({NetworkSource::parse("chained:3:3:2")}, quick());
    REQUIRE(rep.networks.size() == 1);
    auto j = report::bench_json(rep, quick());
    CHECK(j["schema"] == 1);
    CHECK(j["networks"][0]["blocks"] == 3);
    const auto csv = bench_csv(rep);
    CHECK(csv.rfind(kBenchCsvHeader, 0) == 0);
}

TEST_CASE("cli: subcommands on the three-node example") {
    const auto f = test::fixture("worked_example.bn");
    auto attrs = cli({"attractors", f});
    CHECK(attrs.code == kExitOk);
    CHECK(attrs.out == "A0 (1 state): 100\nA1 (1 state): 101\nA2 (1 state): 110\n");

    auto ctl = cli({"control", f, "--source", "101", "--target", "attr:2", "--method", "both", "--json"});
    REQUIRE(ctl.code == kExitOk);
    auto j = nlohmann::json::parse(ctl.out);
    CHECK(j["agree"] == true);
    CHECK(j["answers"][0]["distance"] == 1);
    CHECK(j["answers"][0]["witnesses"][0]["indices"] == std::vector<int>{2});

    auto basin = cli({"basin", f, "--target", "110", "--json"});
    CHECK(nlohmann::json::parse(basin.out)["basin"]["states"] == std::vector<std::string>{"110", "111"});

    auto blocks = cli({"blocks", f, "--json"});
    auto bj = nlohmann::json::parse(blocks.out);
    CHECK(bj.size() == 2);
    CHECK(bj[1]["control_nodes"] == std::vector<std::string>{"x1", "x2"});
    CHECK(bj[1]["elementary"] == false);

    auto orc = cli({"oracle", f, "--json", "--target", "110", "--source", "101"});
    auto oj = nlohmann::json::parse(orc.out);
    CHECK(oj["edges"] == 13);
    CHECK(oj["control"]["distance"] == 1);

    auto gen = cli({"gen", "--n", "5", "--k", "2", "--seed", "3"});
    CHECK(gen.out == to_text(random_network(5, 2, 3)));

    auto source_cycle = cli({"control", test::fixture("toggle.bn"), "--source", "attr:0", "--target", "attr:0"});
    CHECK(source_cycle.code == kExitUsage);
}

TEST_CASE("cli: exit codes") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"nonsense"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    CHECK(cli({"parse", "/nonexistent/x.bn"}).code == kExitUsage);
    const auto bad_path = (std::filesystem::temp_directory_path() / "bnctl_cli_bad.bn").string();
    {
        std::ofstream bad(bad_path);
        bad << "a, a &\n";
    }
    auto parse = cli({"parse", bad_path});
    CHECK(parse.code == kExitParse);
    CHECK(parse.err.find("line 1") != std::string::npos);
    const auto f = test::fixture("worked_example.bn");
    CHECK(cli({"attractors", f, "--cap", "2"}).code == kExitLimit);
    CHECK(cli({"bench"}).code == kExitOk);
    CHECK(cli({"control", f, "--source", "101", "--target", "000"}).code == kExitUsage);
}

TEST_CASE("cli: BNCTL_CAP mirrors --cap") {
    const auto f = test::fixture("worked_example.bn");
    ::setenv("BNCTL_CAP", "2", 1);
    CHECK(cli({"attractors", f}).code == kExitLimit);
    CHECK(cli({"attractors", f, "--cap", "5"}).code == kExitOk);
    ::unsetenv("BNCTL_CAP");
    CHECK(cli({"attractors", f}).code == kExitOk);
}

TEST_CASE("cli: bench JSON is reproducible apart from timings") {
    auto a = cli({"bench", "--json", "--reps", "1", "random:8:2:5", "chained:3:3:1"});
    auto b = cli({"bench", "--json", "--reps", "1", "random:8:2:5", "chained:3:3:1"});
    REQUIRE(a.code == kExitOk);
    CHECK(report::without_timings(nlohmann::json::parse(a.out)).dump() ==
          report::without_timings(nlohmann::json::parse(b.out)).dump());
}
