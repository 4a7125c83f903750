#include "gwp1/cli/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace gwp1;
using namespace gwp1::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

JobSpec job(const std::string& cmd, Json params, const fs::path& cache) {
    JobSpec j;
    j.command = cmd;
    j.params = std::move(params);
    j.cache_dir = cache.string();
    return j;
}

size_t cache_files(const fs::path& dir) {
    size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir)) n += e.path().extension() == ".json";
    return n;
}

}  // namespace

TEST_CASE("documented examples") {
    TempDir dir("gwp1_cli_examples");
    auto inv = run(job("invariant", {{"k", 1}, {"i", {0}}, {"g", 0}, {"d", 1}}, dir.path));
    REQUIRE(inv.exit_code == 0);
    CHECK(Json::parse(inv.text)["value"] == "1");

    auto reg = run(job("regime", {{"name", "q0"}, {"k", 2}, {"dmax", 2}}, dir.path));
    REQUIRE(reg.exit_code == 0);
    Json r = Json::parse(reg.text);
    CHECK(r["pass"] == true);
    CHECK(r["table_comparison"].size() == 2);

    auto res = run(job("resolvent", {{"route", "both"}, {"order", 8}}, dir.path));
    REQUIRE(res.exit_code == 0);
    CHECK(Json::parse(res.text)["pass"] == true);
}

TEST_CASE("cache hits equal recomputation") {
    TempDir dir("gwp1_cli_cache");
    auto j = job("correlator", {{"k", 2}, {"orders", {6, 6}}}, dir.path);
    auto first = run(j);
    REQUIRE(first.exit_code == 0);
    CHECK_FALSE(first.cache_hit);
    CHECK(cache_files(dir.path) == 1);
    auto second = run(j);
    CHECK(second.cache_hit);
    CHECK(second.text == first.text);

    j.use_cache = false;
    auto fresh = run(j);
    CHECK_FALSE(fresh.cache_hit);
    CHECK(fresh.text == first.text);

    j.use_cache = true;
    j.verify_cache = true;
    CHECK(run(j).exit_code == 0);

    // a tampered entry is caught by the verify mode
    std::string key = cache_key(j);
    Cache(dir.path.string()).store(key, "{}\n");
    auto bad = run(j);
    CHECK(bad.exit_code == 3);
    CHECK(bad.diagnostic.find("differs") != std::string::npos);
    j.verify_cache = false;
    CHECK(run(j).text == "{}\n");
    // no temporary files remain
    for (const auto& e : fs::directory_iterator(dir.path)) CHECK(e.path().string().find(".tmp") == std::string::npos);
}

TEST_CASE("cache key canonicalizes parameters") {
    fs::path none;
    auto a = job("resolvent", {{"order", 6}, {"route", "both"}}, none);
    auto b = job("resolvent", {{"route", "both"}, {"order", 6}}, none);
    auto c = job("resolvent", {{"order", 6}}, none);  // default route
    CHECK(cache_key(a) == cache_key(b));
    CHECK(cache_key(a) == cache_key(c));
    CHECK(cache_key(a).size() == 64);
    b.params["order"] = 7;
    CHECK(cache_key(a) != cache_key(b));
    b = a;
    b.precision_bits = 256;
    CHECK(cache_key(a) != cache_key(b));
}

TEST_CASE("cache directory resolution") {
    JobSpec j;
    j.cache_dir = "/x/explicit";
    CHECK(resolve_cache_dir(j) == "/x/explicit");
    j.cache_dir.clear();
    setenv("GWP1_CACHE_DIR", "/x/from-env", 1);
    CHECK(resolve_cache_dir(j) == "/x/from-env");
    unsetenv("GWP1_CACHE_DIR");
    CHECK_FALSE(resolve_cache_dir(j).empty());
}

TEST_CASE("deterministic output") {
    for (auto [cmd, params] :
         {std::pair<std::string, Json>{"eval", {{"function", "Hk"}, {"z", {"0.2", "1.7,-0.3"}}, {"s", "0.8"}, {"check", true}}},
          {"one-point", {{"order", 8}, {"route", "both"}}},
          {"regime", {{"name", "epsInf"}, {"k", 2}, {"gmax", 2}}},
          {"selftest", {{"level", "quick"}}}}) {
        JobSpec j;
        j.command = cmd;
        j.params = params;
        j.use_cache = false;
        auto a = run(j), b = run(j);
        CHECK_MESSAGE(a.exit_code == 0, cmd, ": ", a.diagnostic);
        CHECK(a.text == b.text);
    }
}

TEST_CASE("exit codes") {
    auto code = [](const std::string& cmd, Json params, long bits = 128) {
        JobSpec j;
        j.command = cmd;
        j.params = std::move(params);
        j.precision_bits = bits;
        j.use_cache = false;
        auto r = run(j);
        if (r.exit_code != 0) {
            CHECK_FALSE(r.diagnostic.empty());
            CHECK(r.diagnostic.find('\n') == std::string::npos);
        }
        return r.exit_code;
    };
    CHECK(code("frobnicate", {}) == 2);
    CHECK(code("resolvent", {{"order", 0}}) == 2);
    CHECK(code("resolvent", {{"order", 4}, {"route", "sideways"}}) == 2);
    CHECK(code("resolvent", {{"order", 4}}, 32) == 2);
    CHECK(code("resolvent", {{"order", 4}, {"bogus", 1}}) == 2);
    CHECK(code("correlator", {{"k", 0}, {"orders", 3}}) == 2);
    CHECK(code("correlator", {{"k", 3}, {"orders", 4}, {"region", {0, 0, 1}}}) == 2);
    CHECK(code("invariant", {{"k", 2}, {"i", {0}}, {"g", 0}}) == 2);
    CHECK(code("eval", {{"function", "G"}, {"z", "0.5"}}) == 2);  // pole
    CHECK(code("eval", {{"function", "G"}, {"z", "abc"}}) == 2);
    CHECK(code("regime", {{"name", "q0"}, {"k", 3}, {"dmax", 2}}) == 3);  // table disagrees at d = 2
    CHECK(code("regime", {{"name", "qInf"}, {"k", 3}, {"dmax", 2}}) == 4);
    CHECK(code("regime", {{"name", "eps0"}, {"k", 2}, {"gmax", 9}}) == 4);
    CHECK(code("invariant", {{"k", 1}, {"i", {0}}, {"g", 0}, {"d", -1}}) == 2);
    CHECK(code("invariant", {{"k", 1}, {"i", {0}}, {"g", 0}, {"d", 2}}) == 0);  // structural zero
}

TEST_CASE("csv only for coefficient tables") {
    JobSpec j;
    j.command = "one-point";
    j.params = {{"order", 4}};
    j.format = "csv";
    j.use_cache = false;
    auto r = run(j);
    REQUIRE(r.exit_code == 0);
    CHECK(r.text.rfind("entry,index,value\n", 0) == 0);
    CHECK(r.text.find("F1,2,") != std::string::npos);
    j.command = "invariant";
    j.params = {{"k", 1}, {"i", {0}}, {"g", 0}};
    CHECK(run(j).exit_code == 2);
}

TEST_CASE("selftest reports a corrupted table by entry") {
    TempDir dir("gwp1_cli_tables");
    for (const char* stem : {"eps0", "eps_inf", "q0", "q_inf", "debye"})
        fs::copy_file(std::string(GWP1_TEST_TABLE_DIR) + "/" + stem + ".json", dir.path / (std::string(stem) + ".json"));
    {
        std::ifstream in(dir.path / "q0.json");
        Json doc = Json::parse(in);
        doc["entries"][3]["expr"] = Json{{"op", "frob"}, {"args", Json::array({"1"})}};
        std::ofstream(dir.path / "q0.json") << doc.dump();
    }
    setenv("GWP1_TABLE_DIR", dir.path.string().c_str(), 1);
    JobSpec j;
    j.command = "selftest";
    auto r = run(j);
    unsetenv("GWP1_TABLE_DIR");
    CHECK(r.exit_code == 3);
    Json rep = Json::parse(r.text);
    CHECK(rep["pass"] == false);
    REQUIRE(rep["failures"].size() == 1);
    std::string detail = rep["failures"][0]["detail"];
    CHECK(detail.find("entry 3") != std::string::npos);
    CHECK(detail.find("k=1 d=4") != std::string::npos);
    CHECK(r.diagnostic.find("tables") != std::string::npos);

    CHECK(run(j).exit_code == 0);
}
