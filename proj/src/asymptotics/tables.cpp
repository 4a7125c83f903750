#include "gwp1/asymptotics/asymptotics.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#ifndef GWP1_TABLE_DIR
#define GWP1_TABLE_DIR "data/tables"
#endif

namespace gwp1::asym {

namespace {

const std::set<std::string> kStems = {"eps0", "eps_inf", "q0", "q_inf", "debye"};
const std::vector<std::string> kIndexFields = {"k", "g", "d", "m", "block", "order", "name", "kind"};

TableEntry parse_entry(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("expr")) throw ValidationError(where + ": entry without 'expr'");
    TableEntry e;
    e.meta = j;
    e.meta.erase("expr");
    try {
        e.expr = expr_from_json(j["expr"]);
    } catch (const std::exception& ex) {
        throw ValidationError(where + " (" + e.id() + "): " + ex.what());
    }
    return e;
}

}  // namespace

std::string TableEntry::id() const {
    std::string out;
    for (const auto& f : kIndexFields) {
        if (!meta.contains(f)) continue;
        if (!out.empty()) out += " ";
        const Json& v = meta[f];
        out += f + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
}

int TableEntry::field(const std::string& name, int fallback) const {
    if (!meta.contains(name) || !meta[name].is_number_integer()) return fallback;
    return meta[name].get<int>();
}

const TableEntry* Table::find(const std::map<std::string, int>& fields, bool in_blocks) const {
    const auto& list = in_blocks ? blocks : entries;
    for (const auto& e : list) {
        bool ok = true;
        for (const auto& [name, v] : fields)
            if (e.field(name, -(1 << 30)) != v) {
                ok = false;
                break;
            }
        if (ok) return &e;
    }
    return nullptr;
}

std::string default_table_dir() {
    if (const char* env = std::getenv("GWP1_TABLE_DIR"); env && *env) return env;
    return GWP1_TABLE_DIR;
}

Table load_table(const std::string& stem, const std::string& dir) {
    if (!kStems.count(stem)) throw ValidationError("unknown table '" + stem + "'");
    Table t;
    t.path = dir + "/" + stem + ".json";
    std::ifstream in(t.path);
    if (!in) throw ValidationError("cannot open table file " + t.path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& ex) {
        throw ValidationError(t.path + ": " + ex.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw ValidationError(t.path + ": missing 'entries' array");
    t.regime = doc.value("regime", stem);
    size_t i = 0;
    for (const auto& e : doc["entries"]) t.entries.push_back(parse_entry(e, t.path + " entry " + std::to_string(i++)));
    if (doc.contains("blocks")) {
        i = 0;
        for (const auto& e : doc["blocks"]) t.blocks.push_back(parse_entry(e, t.path + " block " + std::to_string(i++)));
    }
    return t;
}

}  // namespace gwp1::asym
