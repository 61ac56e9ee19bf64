#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sqf {

namespace {

const std::map<std::string, std::string>& default_values() {
    static const std::map<std::string, std::string> defaults = {
        {"threads", "0"},           // 0 = auto
        {"budget", "1000000000"},   // iteration ceiling for any single evaluation
        {"gauss.q_max", "150"},
        {"salie.q_max", "201"},
        {"weil.q_max", "201"},
        {"geom.min_dist", "0.05"},
        {"geom.grid_steps", "97"},
        {"geom.lengths", "1,2,5,10,100,1000"},
        {"lambda.closed_product_max", "225"},
        {"lambda.exact_law_product_max", "100"},
        {"lambda.symmetry_product_max", "30"},
        {"mult.product_max", "210"},
        {"bounds.product_max", "60"},
        {"bounds.h0", "6"},
        {"sigma.cutoff_a", "150"},
        {"sigma.cutoff_b", "10000"},
        {"sigma.dual_path_p_max", "13"},
        {"sigma.exact_law_p_max", "997"},
        {"sigma.divisor_d_max", "3"},
        {"decomposition.product_max", "15"},
        {"decomposition.h_list", "5,8,13"},
        {"mobius.h_max", "12"},
        {"census.h_max", "15"},
        {"census.table_check_limit", "1000000"},
        {"fit.h_list", "50,100,150,200,250,300"},
    };
    return defaults;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Config::Config() : values_(default_values()) {}

void Config::set(const std::string& key, const std::string& value) {
    auto it = values_.find(key);
    if (it == values_.end())
        fail(errc::usage, "unknown config key: " + key);
    it->second = value;
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io, "cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            fail(errc::usage, path + ":" + std::to_string(lineno) + ": expected key = value");
        set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

const std::string& Config::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
        fail(errc::usage, "unknown config key: " + key);
    return it->second;
}

i64 Config::get_int(const std::string& key) const {
    const std::string& v = get(key);
    char* end = nullptr;
    long long parsed = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        fail(errc::usage, "config key " + key + " is not an integer: " + v);
    return static_cast<i64>(parsed);
}

double Config::get_real(const std::string& key) const {
    const std::string& v = get(key);
    char* end = nullptr;
    double parsed = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        fail(errc::usage, "config key " + key + " is not a number: " + v);
    return parsed;
}

std::vector<i64> Config::get_int_list(const std::string& key) const {
    const std::string& v = get(key);
    std::vector<i64> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        if (t.empty())
            continue;
        char* end = nullptr;
        long long parsed = std::strtoll(t.c_str(), &end, 10);
        if (end == t.c_str() || *end != '\0')
            fail(errc::usage, "config key " + key + " is not an integer list: " + v);
        out.push_back(static_cast<i64>(parsed));
    }
    if (out.empty())
        fail(errc::usage, "config key " + key + " is an empty list");
    return out;
}

} // namespace sqf
