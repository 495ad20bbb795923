#include "lie3/algebra_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace lie3 {

using nlohmann::json;

AlgebraFileError::AlgebraFileError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                    ": " + msg
                              : msg),
      line_(line),
      column_(column) {}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty() || s == "q") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> name_list(const json& doc, const char* key) {
    if (!doc.contains(key)) throw AlgebraFileError(std::string("missing key '") + key + "'");
    const json& a = doc.at(key);
    if (!a.is_array()) throw AlgebraFileError(std::string("'") + key + "' must be an array of names");
    std::vector<std::string> out;
    for (const json& v : a) {
        if (!v.is_string()) throw AlgebraFileError(std::string("'") + key + "' must contain strings");
        std::string s = v.get<std::string>();
        if (!valid_name(s))
            throw AlgebraFileError("invalid generator name '" + s +
                                   "' (letters, digits and '_', not starting with a digit; 'q' is reserved)");
        out.push_back(std::move(s));
    }
    return out;
}

CycQ read_coeff(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return CycQ::parse(v.get<std::string>());
        if (v.is_number_integer()) return CycQ(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw AlgebraFileError(where + ": bad coefficient: " + e.what());
    }
    throw AlgebraFileError(where + ": coefficient must be a string such as \"-1/2\" or \"1+q\"");
}

std::string field(const json& rec, const char* key, const std::string& where) {
    if (!rec.is_object() || !rec.contains(key) || !rec.at(key).is_string())
        throw AlgebraFileError(where + ": missing string field '" + key + "'");
    return rec.at(key).get<std::string>();
}

int lookup(const AlgebraSpec& s, bool g1, const std::string& name, const std::string& where) {
    auto idx = g1 ? s.g1_index(name) : s.g0_index(name);
    if (!idx)
        throw AlgebraFileError(where + ": unknown " + (g1 ? "g1" : "g0") + " generator '" + name + "'");
    return *idx;
}

SparseVec read_out(const json& rec, const AlgebraSpec& s, bool g1, const std::string& where) {
    SparseVec v;
    if (!rec.contains("out")) return v;
    const json& out = rec.at("out");
    if (!out.is_array()) throw AlgebraFileError(where + ": 'out' must be an array");
    for (const json& t : out) {
        int k = lookup(s, g1, field(t, "gen", where), where);
        if (!t.contains("coeff")) throw AlgebraFileError(where + ": missing field 'coeff'");
        axpy(v, read_coeff(t.at("coeff"), where), SparseVec{{k, CycQ(1)}});
    }
    return v;
}

const json& records(const json& doc, const char* key) {
    static const json empty = json::array();
    if (!doc.contains(key)) return empty;
    const json& a = doc.at(key);
    if (!a.is_array()) throw AlgebraFileError(std::string("'") + key + "' must be an array");
    return a;
}

nlohmann::ordered_json out_json(const SparseVec& v, const std::vector<std::string>& names) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [k, c] : v) a.push_back({{"gen", names[static_cast<std::size_t>(k)]}, {"coeff", c.str()}});
    return a;
}

}  // namespace

AlgebraSpec parse_algebra(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // translate the byte offset into line and column
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("; "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw AlgebraFileError("syntax error: " + msg, line, col);
    }
    if (!doc.is_object()) throw AlgebraFileError("top level must be an object");

    std::vector<std::string> g0 = name_list(doc, "g0");
    std::vector<std::string> g1 = name_list(doc, "g1");
    std::set<std::string> seen;
    for (const auto& nm : g0)
        if (!seen.insert(nm).second) throw AlgebraFileError("duplicate generator name '" + nm + "'");
    for (const auto& nm : g1)
        if (!seen.insert(nm).second) throw AlgebraFileError("duplicate generator name '" + nm + "'");
    AlgebraSpec s(g0, g1);

    std::map<std::pair<int, int>, SparseVec> c00;
    std::size_t k = 0;
    for (const json& rec : records(doc, "c00")) {
        std::string where = "c00[" + std::to_string(k++) + "]";
        int i = lookup(s, false, field(rec, "left", where), where);
        int j = lookup(s, false, field(rec, "right", where), where);
        if (!c00.emplace(std::make_pair(i, j), read_out(rec, s, false, where)).second)
            throw AlgebraFileError(where + ": duplicate record for [" + g0[i] + ", " + g0[j] + "]");
    }
    for (const auto& [ij, v] : c00) s.set_bracket00_raw(ij.first, ij.second, v);
    for (const auto& [ij, v] : c00)
        if (ij.first != ij.second && !c00.contains({ij.second, ij.first})) {
            SparseVec neg;
            axpy(neg, CycQ(-1), v);
            s.set_bracket00_raw(ij.second, ij.first, neg);
        }

    std::set<std::pair<int, int>> seen01;
    k = 0;
    for (const json& rec : records(doc, "c01")) {
        std::string where = "c01[" + std::to_string(k++) + "]";
        int i = lookup(s, false, field(rec, "left", where), where);
        int j = lookup(s, true, field(rec, "right", where), where);
        if (!seen01.insert({i, j}).second)
            throw AlgebraFileError(where + ": duplicate record for [" + g0[i] + ", " + g1[j] + "]");
        s.set_action(i, j, read_out(rec, s, true, where));
    }

    std::set<std::array<int, 3>> seen111;
    k = 0;
    for (const json& rec : records(doc, "c111")) {
        std::string where = "c111[" + std::to_string(k++) + "]";
        std::array<int, 3> t{lookup(s, true, field(rec, "left", where), where),
                             lookup(s, true, field(rec, "mid", where), where),
                             lookup(s, true, field(rec, "right", where), where)};
        std::array<int, 3> key = t;
        std::sort(key.begin(), key.end());
        if (!seen111.insert(key).second)
            throw AlgebraFileError(where + ": duplicate record for the symmetric triple {" + g1[t[0]] +
                                   ", " + g1[t[1]] + ", " + g1[t[2]] + "}");
        s.set_triple(t[0], t[1], t[2], read_out(rec, s, false, where));
    }
    for (const auto& [key, v] : doc.items())
        if (key != "g0" && key != "g1" && key != "c00" && key != "c01" && key != "c111")
            throw AlgebraFileError("unknown top-level key '" + key + "'");
    return s;
}

AlgebraSpec load_algebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AlgebraFileError("cannot open algebra file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_algebra(ss.str());
    } catch (const AlgebraFileError& e) {
        throw AlgebraFileError(path + ": " + e.what());
    }
}

std::string algebra_to_json(const AlgebraSpec& s) {
    const auto& g0 = s.g0_names();
    const auto& g1 = s.g1_names();
    nlohmann::ordered_json doc;
    doc["g0"] = g0;
    doc["g1"] = g1;
    nlohmann::ordered_json c00 = nlohmann::ordered_json::array(), c01 = c00, c111 = c00;
    for (const auto& [ij, v] : s.c00())
        c00.push_back({{"left", g0[ij.first]}, {"right", g0[ij.second]}, {"out", out_json(v, g0)}});
    for (const auto& [ij, v] : s.c01())
        c01.push_back({{"left", g0[ij.first]}, {"right", g1[ij.second]}, {"out", out_json(v, g1)}});
    for (const auto& [t, v] : s.c111())
        c111.push_back({{"left", g1[t[0]]}, {"mid", g1[t[1]]}, {"right", g1[t[2]]}, {"out", out_json(v, g0)}});
    doc["c00"] = c00;
    doc["c01"] = c01;
    doc["c111"] = c111;
    return doc.dump(2) + "\n";
}

AlgebraSpec resolve_algebra(const std::string& ref) {
    if (ref.rfind("builtin:", 0) == 0) return builtin(ref.substr(8)).spec;
    return load_algebra(ref);
}

}  // namespace lie3
