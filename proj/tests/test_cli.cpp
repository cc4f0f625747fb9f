#include "doctest.h"

#include <sstream>

#include "symdet/cli.hpp"
#include "symdet/render.hpp"

using namespace symdet;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const CliHooks& hooks = {})
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("betti command")
{
    const Run table = run({"betti", "--n", "3", "--t", "1", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("total: 1 6 8 3") != std::string::npos);

    const Run json = run({"betti", "--n", "5", "--t", "3", "--format", "json"});
    REQUIRE(json.code == 0);
    const Json j = Json::parse(json.out);
    CHECK(j["entries"][1]["rank"] == "15");
    CHECK(j["entries"][2]["rank"] == "24");
    CHECK(j["entries"][3]["rank"] == "10");
    CHECK(betti_table_from_json(j) == betti_table(RingParams::make(5, 3)));

    const Run bad = run({"betti", "--n", "2", "--t", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}

TEST_CASE("output is byte-identical across runs")
{
    const std::vector<std::string> args{"betti", "--n", "8", "--t", "2", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("classify command")
{
    const Run sym = run({"classify", "--family", "symmetric", "--n", "3", "--t", "1", "--format", "json"});
    REQUIRE(sym.code == 0);
    CHECK(Json::parse(sym.out)["almost_gorenstein"] == true);

    const Run hankel = run({"classify", "--family", "hankel", "--n", "5", "--t", "2", "--format", "json"});
    REQUIRE(hankel.code == 0);
    CHECK(Json::parse(hankel.out)["almost_gorenstein"] == true);

    const Run pf = run({"classify", "--family", "pfaffian-square", "--n", "5", "--format", "json"});
    REQUIRE(pf.code == 0);
    const Json pj = Json::parse(pf.out);
    CHECK(pj["almost_gorenstein"] == false);
    CHECK(to_json(classification_from_json(pj)) == pj);

    const Run text = run({"classify", "--family", "symmetric", "--n", "4", "--t", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("almost_gorenstein=no") != std::string::npos);

    CHECK(run({"classify", "--family", "symmetric", "--n", "4"}).code == 2);
    CHECK(run({"classify", "--family", "pfaffian-square", "--n", "4"}).code == 2);
    CHECK(run({"classify", "--family", "pfaffian-square", "--n", "5", "--t", "1"}).code == 2);
    CHECK(run({"classify", "--family", "skew", "--n", "5"}).code == 2);
    CHECK(run({"classify", "--family", "hankel", "--n", "3", "--t", "4"}).code == 2);
}

TEST_CASE("schur-rank and partition commands")
{
    const Run r = run({"schur-rank", "--shape", "5,4,1", "--n", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["rank"] == "24");
    CHECK(j["oracle"] == "24");

    const Run capped = run({"schur-rank", "--shape", "5,4,1", "--n", "5", "--oracle-cap", "5", "--format", "json"});
    REQUIRE(capped.code == 0);
    CHECK(Json::parse(capped.out)["oracle"].is_null());

    CHECK(run({"schur-rank", "--shape", "2,3", "--n", "5"}).code == 2);
    CHECK(run({"schur-rank", "--shape", "2,1", "--n", "0"}).code == 2);

    const Run p = run({"partition", "--shape", "4,4,2,1", "--format", "json"});
    REQUIRE(p.code == 0);
    const Json pj = Json::parse(p.out);
    CHECK(pj["conjugate"] == "4,3,2,2");
    CHECK(pj["hook_notation"] == "4,3|4,2");
    CHECK(pj["diagonal_rank"] == 2);
    CHECK(pj["hook_lengths"][0][0] == 7);

    const Run h = run({"partition", "--shape", "3,1|2,1", "--format", "json"});
    REQUIRE(h.code == 0);
    CHECK(Json::parse(h.out)["shape"] == "3,2");

    const Run empty = run({"partition", "--shape", ""});
    CHECK(empty.code == 0);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"betti", "--n", "3", "--t", "1", "--bogus"}).code == 2);
    CHECK(run({"betti", "--n", "3", "--t", "1", "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"betti", "--n", "three", "--t", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify command")
{
    const Run ok = run({"verify", "--n-max", "6"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("PASS resolution-telescope") != std::string::npos);

    const Run narrow = run({"verify", "--n-max", "8", "--t-max", "3", "--format", "json"});
    CHECK(narrow.code == 0);
    CHECK(Json::parse(narrow.out)["t_max"] == 3);

    CHECK(run({"verify", "--n-max", "1"}).code == 2);
}

TEST_CASE("verify reports a corrupted rank function")
{
    CliHooks hooks;
    hooks.rank = [](const Partition& p, int n) -> BigInt {
        BigInt r = schur_rank(p, n);
        return p == make_partition({3, 2, 1}) ? BigInt(r + 1) : r;
    };
    const Run bad = run({"verify", "--n-max", "5"}, hooks);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL schur-oracle") != std::string::npos);
    CHECK(bad.out.find("FAIL resolution-telescope") != std::string::npos);
    CHECK(bad.err.find("schur-oracle") != std::string::npos);
    CHECK(bad.err.find("lambda=3,2,1") != std::string::npos);
}
