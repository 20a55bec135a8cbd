#include "commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace popcrit;
using namespace popcrit::cli;

namespace {

int run_args(std::vector<std::string> args, std::string& out, std::string& err) {
    args.insert(args.begin(), "popcrit");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream o, e;
    int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
    out = o.str();
    err = e.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("config parsing") {
    auto j = ojson::parse(R"({"root_system":"A1","weights":[[1],[1]],"points":["0","1/2"],"tuple":["x - 1/4"]})");
    auto c = parse_config(j, {});
    CHECK(c.pi.points[1] == Rat(1, 2));
    REQUIRE(c.tuple.has_value());
    CHECK(c.tuple->front() == Poly::linear_root(Rat(1, 4)));
    CHECK_FALSE(c.seed.has_value());
    CHECK_THROWS_AS(c.require_seed(), ConfigError);
    Overrides o;
    o.seed = 9;
    CHECK(parse_config(j, o).require_seed() == 9);
}

TEST_CASE("malformed configs are config errors") {
    CHECK_THROWS_AS(parse_config(ojson::parse(R"({"weights":[]})"), {}), ConfigError);
    CHECK_THROWS_AS(parse_config(ojson::parse(R"({"root_system":"A2","weights":[[1]],"points":["0"]})"), {}),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(ojson::parse(R"({"root_system":"A1","weights":[[1],[1]],"points":["0","0"]})"), {}),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(ojson::parse(R"({"root_system":"A1","tuple":["x","x"]})"), {}), ConfigError);
}

TEST_CASE("verify reports criticality") {
    auto ok = write_temp("popcrit_ok.json",
                         R"({"root_system":"A1","weights":[[1],[1]],"points":["0","2"],"tuple":["x - 1"],"seed":1})");
    auto bad = write_temp("popcrit_bad.json",
                          R"({"root_system":"A1","weights":[[1],[1]],"points":["0","2"],"tuple":["x - 3"],"seed":1})");
    std::string out, err;
    CHECK(run_args({"verify", "--config", ok}, out, err) == 0);
    CHECK(out.find("[critical] PASS") != std::string::npos);
    CHECK(run_args({"verify", "--config", bad}, out, err) == 1);
}

TEST_CASE("exit codes") {
    std::string out, err;
    auto noseed = write_temp("popcrit_noseed.json", R"({"root_system":"A2","weights":[],"points":[]})");
    CHECK(run_args({"populate", "--config", noseed}, out, err) == 2);
    CHECK(err.find("seed") != std::string::npos);
    auto broken = write_temp("popcrit_broken.json", "{not json");
    CHECK(run_args({"populate", "--config", broken}, out, err) == 2);
    CHECK(run_args({"identities", "--trials", "3", "--format", "json"}, out, err) == 0);
    CHECK(ojson::parse(out)["ok"] == true);
}

TEST_CASE("populate writes an atlas") {
    auto cfg = write_temp("popcrit_pop.json", R"({"root_system":"A2","weights":[],"points":[],"seed":4})");
    auto atlas = (std::filesystem::temp_directory_path() / "popcrit_atlas.json").string();
    std::string out, err;
    REQUIRE(run_args({"populate", "--config", cfg, "--output", atlas}, out, err) == 0);
    std::ifstream in(atlas);
    auto j = ojson::parse(in);
    CHECK(j["schema"] == "atlas-v1");
    CHECK(j["members"].size() == 6);
    CHECK(j["seed"] == 4);
}
