#pragma once

#include "gwp1/ring/json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwp1::cli {

inline constexpr const char* kCodeVersion = "gwp1-0.1.0";

struct JobSpec {
    std::string command;      // resolvent, correlator, invariant, one-point, eval, regime, selftest
    Json params = Json::object();
    std::string format = "json";  // json | csv
    long precision_bits = 128;
    std::string cache_dir;    // empty: $GWP1_CACHE_DIR, then $HOME/.cache/gwp1
    bool use_cache = true;
    bool verify_cache = false;  // recompute and compare against the cached text
};

// Checks the command name, the format and the per-command parameters
// (orders >= 1, k >= 1, precision >= 53); throws ValidationError.
void validate(const JobSpec& job);

// Runs the computation without cache or formatting. The payload carries a
// "pass" field for commands that verify something.
Json execute(const JobSpec& job);

// Content hash of (command, canonical parameters, precision, code version, table files for
// regime jobs), hex SHA-256.
std::string cache_key(const JobSpec& job);
std::string resolve_cache_dir(const JobSpec& job);

class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}
    std::optional<std::string> load(const std::string& key) const;
    // Writes to a temporary file in the same directory and renames it into place.
    void store(const std::string& key, const std::string& text) const;
    std::string path(const std::string& key) const;

private:
    std::string dir_;
};

// Flat index -> value rows for coefficient tables; ValidationError otherwise.
std::string to_csv(const Json& payload);

struct RunResult {
    int exit_code = 0;
    std::string text;        // emitted artifact (empty on error)
    std::string diagnostic;  // one line for standard error, empty on success
    bool cache_hit = false;
};

// validate + cache + execute + format; maps exceptions to exit codes:
// 2 validation, 3 route disagreement or failed verification, 4 insufficient order.
RunResult run(const JobSpec& job);
int exit_code_for(const std::exception& e);

// ---- checks shared by selftest and the acceptance binary ----

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

// Acceptance criteria 1..11; `which` empty runs all.
std::vector<CheckResult> acceptance_criteria(const std::vector<int>& which = {});
// Fast structural checks (< 30 s), including that every regime table loads.
std::vector<CheckResult> quick_checks();
Json to_json(const CheckResult& r);

}  // namespace gwp1::cli
