#pragma once

#include "popcrit/bc.hpp"
#include "popcrit/reproduction.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace popcrit::cli {

using ojson = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> max_degree;
    std::optional<int> jobs;
    std::string output;
    std::string format = "table";
};

struct RunConfig {
    ProblemInstance pi;
    std::optional<TupleY> tuple;
    std::optional<std::uint64_t> seed;
    int max_degree = 8;
    int jobs = 1;
    int samples = 20;
    int trials = 100;
    std::vector<int> l;                  // count: degrees to test (sl_2)
    std::optional<Weight> lambda_inf;    // count: target weight
    std::string output;
    std::string format = "table";

    std::uint64_t require_seed() const;
};

RunConfig parse_config(const ojson& j, const Overrides& o);
RunConfig load_config(const std::string& path, const Overrides& o);

// Collects informational lines and tagged checks; rendered as text or JSON.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}
    void info(const std::string& key, const std::string& value);
    void check(const std::string& tag, bool ok, const std::string& detail);
    void data(const std::string& key, ojson value) { data_[key] = std::move(value); }
    bool ok() const { return ok_; }
    void render(std::ostream& out, const std::string& format) const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> info_;
    std::vector<std::tuple<std::string, bool, std::string>> checks_;
    ojson data_ = ojson::object();
    bool ok_ = true;
};

ojson atlas_to_json(const RunConfig& cfg, const PopulationAtlas& atlas);

Report cmd_verify(const RunConfig& cfg);
// Writes the atlas to cfg.output when set.
Report cmd_populate(const RunConfig& cfg);
Report cmd_fundamental(const RunConfig& cfg);
Report cmd_selfdual(const RunConfig& cfg);
Report cmd_count(const RunConfig& cfg);
Report cmd_identities(std::uint64_t seed, int trials);

// Entry point shared by the binary and the tests; returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace popcrit::cli
