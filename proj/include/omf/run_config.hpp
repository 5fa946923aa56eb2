#pragma once

// key = value run configuration.  Lines are `key = value`, `#` starts a
// comment, size lists accept `a*n` for a value repeated n times, so the
// standard distribution on 121 points reads
//
//   point_sizes = 1*4 13*9
//
// Unknown keys and malformed values are reported with their line number.

#include <fstream>
#include <sstream>
#include <string>

#include "omf/design.hpp"

namespace omf {

struct RunConfig {
    DesignParams params{121, 16, 2};
    std::vector<int> point_sizes;
    std::vector<int> block_sizes;
    std::string group;            // feasibility runs
    std::string stages = "auto";  // "auto" or "flat"
    int block_len = 1;            // type enumeration runs
    int target_depth = -1;
    bool count_only = false;
    bool prune_unfillable = false;
    std::size_t store_limit = 10000;
    std::string prescribed;       // optional matrix file with starting rows
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline long long parse_ll(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(where + ": expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error(where + ": expected an integer, got '" + s + "'");
    return x;
}

inline bool parse_bool(const std::string& s, const std::string& where) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::runtime_error(where + ": expected a boolean, got '" + s + "'");
}

inline std::vector<int> parse_size_list(const std::string& s, const std::string& where) {
    std::istringstream is(s);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t star = tok.find('*');
        if (star == std::string::npos) {
            out.push_back(static_cast<int>(parse_ll(tok, where)));
        } else {
            int val = static_cast<int>(parse_ll(tok.substr(0, star), where));
            int rep = static_cast<int>(parse_ll(tok.substr(star + 1), where));
            if (rep < 0) throw std::runtime_error(where + ": negative repeat count");
            for (int i = 0; i < rep; ++i) out.push_back(val);
        }
    }
    if (out.empty()) throw std::runtime_error(where + ": empty size list");
    return out;
}

}  // namespace detail

inline RunConfig parse_config(std::istream& is, const std::string& name = "config") {
    RunConfig cfg;
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        std::string where = name + ":" + std::to_string(ln);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(where + ": expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error(where + ": expected 'key = value'");
        if (key == "v")
            cfg.params.v = static_cast<int>(detail::parse_ll(val, where));
        else if (key == "k")
            cfg.params.k = static_cast<int>(detail::parse_ll(val, where));
        else if (key == "lambda")
            cfg.params.lambda = static_cast<int>(detail::parse_ll(val, where));
        else if (key == "point_sizes")
            cfg.point_sizes = detail::parse_size_list(val, where);
        else if (key == "block_sizes")
            cfg.block_sizes = detail::parse_size_list(val, where);
        else if (key == "group")
            cfg.group = val;
        else if (key == "stages") {
            if (val != "auto" && val != "flat")
                throw std::runtime_error(where + ": stages must be auto or flat");
            cfg.stages = val;
        } else if (key == "block_len")
            cfg.block_len = static_cast<int>(detail::parse_ll(val, where));
        else if (key == "target_depth")
            cfg.target_depth = static_cast<int>(detail::parse_ll(val, where));
        else if (key == "count_only")
            cfg.count_only = detail::parse_bool(val, where);
        else if (key == "prune_unfillable")
            cfg.prune_unfillable = detail::parse_bool(val, where);
        else if (key == "store_limit")
            cfg.store_limit = static_cast<std::size_t>(detail::parse_ll(val, where));
        else if (key == "prescribed")
            cfg.prescribed = val;
        else
            throw std::runtime_error(where + ": unknown key '" + key + "'");
    }
    if (cfg.block_sizes.empty() && !cfg.point_sizes.empty())
        cfg.block_sizes = cfg.point_sizes;
    return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return parse_config(is, path);
}

}  // namespace omf
