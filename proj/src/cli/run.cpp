#include "gwp1/asymptotics/asymptotics.hpp"
#include "gwp1/cli/cli.hpp"
#include "jobs_internal.hpp"

#include <openssl/evp.h>

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gwp1::cli {

namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render(const JobSpec& job, const Json& payload) {
    if (job.format == "csv") return to_csv(payload);
    return payload.dump(2) + "\n";
}

bool cacheable(const JobSpec& job) { return job.command != "selftest"; }

}  // namespace

std::string cache_key(const JobSpec& job) {
    // nlohmann::json (not ordered) sorts object keys, which makes the dump canonical
    nlohmann::json canon = nlohmann::json::parse(normalized_params(job).dump());
    std::string text = job.command + "\n" + canon.dump() + "\n" + std::to_string(job.precision_bits) + "\n" +
                       job.format + "\n" + kCodeVersion + "\n";
    if (job.command == "regime")
        for (const char* stem : {"eps0", "eps_inf", "q0", "q_inf", "debye"})
            text += sha256_hex(read_file(asym::default_table_dir() + "/" + stem + ".json")) + "\n";
    return sha256_hex(text);
}

std::string resolve_cache_dir(const JobSpec& job) {
    if (!job.cache_dir.empty()) return job.cache_dir;
    if (const char* env = std::getenv("GWP1_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/gwp1";
    return (fs::temp_directory_path() / "gwp1-cache").string();
}

std::string Cache::path(const std::string& key) const { return dir_ + "/" + key + ".json"; }

std::optional<std::string> Cache::load(const std::string& key) const {
    std::ifstream in(path(key), std::ios::binary);
    if (!in) return std::nullopt;
    try {
        Json e = Json::parse(in);
        if (e.value("key", "") != key || !e.contains("payload") || !e["payload"].is_string()) return std::nullopt;
        return e["payload"].get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are recomputed and overwritten
    }
}

void Cache::store(const std::string& key, const std::string& text) const {
    fs::create_directories(dir_);
    static std::atomic<unsigned> counter{0};
    std::string tmp = path(key) + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    auto now = std::chrono::system_clock::now().time_since_epoch();
    Json e{{"key", key},
           {"created_at", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
           {"code_version", kCodeVersion},
           {"payload", text}};
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << e.dump() << "\n";
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    fs::rename(tmp, path(key));
}

std::string to_csv(const Json& payload) {
    if (!payload.contains("table") || !payload["table"].is_array())
        throw ValidationError("csv output is only available for coefficient tables");
    std::string out = "entry,index,value\n";
    for (const auto& row : payload["table"]) {
        std::string idx;
        for (const auto& i : row["index"]) idx += (idx.empty() ? "" : " ") + std::to_string(i.get<int>());
        out += csv_field(row["entry"].get<std::string>()) + "," + csv_field(idx) + "," +
               csv_field(row["value"].get<std::string>()) + "\n";
    }
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ValidationError*>(&e)) return 2;
    if (dynamic_cast<const RouteDisagreement*>(&e) || dynamic_cast<const ConvergenceError*>(&e)) return 3;
    if (dynamic_cast<const InsufficientOrder*>(&e)) return 4;
    return 1;
}

RunResult run(const JobSpec& job) {
    RunResult r;
    try {
        validate(job);
        std::optional<Cache> cache;
        std::string key;
        if (cacheable(job) && (job.use_cache || job.verify_cache)) {
            cache.emplace(resolve_cache_dir(job));
            key = cache_key(job);
        }
        std::optional<std::string> hit;
        if (cache) hit = cache->load(key);
        if (hit && !job.verify_cache) {
            r.text = *hit;
            r.cache_hit = true;
        } else {
            Json payload = execute(job);
            r.text = render(job, payload);
            if (hit && *hit != r.text) {
                r.exit_code = 3;
                r.diagnostic = "cache entry " + cache->path(key) + " differs from recomputation";
                return r;
            }
            if (cache && job.use_cache && !hit) cache->store(key, r.text);
        }
        // verification payloads carry "pass"; a failed verification exits 3 with the artifact emitted
        if (job.format == "json") {
            Json payload = Json::parse(r.text);
            if (payload.contains("pass") && payload["pass"] == false) {
                r.exit_code = 3;
                r.diagnostic = job.command + ": verification failed";
                if (payload.contains("failures")) {
                    std::string ids;
                    for (const auto& f : payload["failures"]) ids += (ids.empty() ? " (" : ", ") + f["id"].get<std::string>();
                    r.diagnostic += ids + ")";
                }
            }
        }
    } catch (const std::exception& e) {
        r.exit_code = exit_code_for(e);
        r.text.clear();
        std::string msg = e.what();
        for (auto& c : msg)
            if (c == '\n') c = ' ';
        r.diagnostic = msg;
    }
    return r;
}

}  // namespace gwp1::cli
