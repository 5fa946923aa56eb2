#pragma once

// Command implementations shared by the CLI and the tests: each takes a
// parsed configuration, performs one unit of work, prints a human summary
// and returns a machine-readable manifest plus the process exit code
// (0 success, 1 usage or config error, 2 runtime failure or failed
// verification, 3 search exhausted without reaching the target).

#include <chrono>
#include <filesystem>
#include <iomanip>

#include <nlohmann/json.hpp>

#include "omf/canonical.hpp"
#include "omf/feasibility.hpp"
#include "omf/matrix_io.hpp"
#include "omf/oracle.hpp"
#include "omf/run_config.hpp"
#include "omf/search.hpp"
#include "omf/verify.hpp"
#include "omf/version.hpp"

namespace omf {

struct RunResult {
    int exit_code = 0;
    nlohmann::json manifest;
};

namespace detail {

inline std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline OrbitDistribution config_distribution(const RunConfig& cfg) {
    if (cfg.point_sizes.empty())
        throw std::runtime_error("config needs point_sizes");
    return make_distribution(cfg.params, cfg.point_sizes, cfg.block_sizes);
}

inline nlohmann::json base_manifest(const RunConfig& cfg, const std::string& command) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = {{"v", cfg.params.v}, {"k", cfg.params.k}, {"lambda", cfg.params.lambda}};
    if (!cfg.point_sizes.empty()) j["point_sizes"] = cfg.point_sizes;
    if (!cfg.block_sizes.empty()) j["block_sizes"] = cfg.block_sizes;
    return j;
}

inline void write_manifest(const std::string& out_dir, const nlohmann::json& j) {
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    std::ofstream os(out_dir + "/manifest.json");
    if (!os) throw std::runtime_error("cannot write " + out_dir + "/manifest.json");
    os << j.dump(2) << '\n';
}

inline nlohmann::json stages_json(const std::vector<RowStage>& stages) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RowStage& st : stages) {
        nlohmann::json s;
        s["Omega"] = st.block_len;
        s["count"] = st.count;
        if (!st.pins.empty()) {
            nlohmann::json pins = nlohmann::json::array();
            for (const ClassPin& p : st.pins)
                pins.push_back({{"cap", p.cap}, {"exact_sum", p.exact_sum}});
            s["pins"] = pins;
        }
        arr.push_back(s);
    }
    return arr;
}

}  // namespace detail

inline RunResult run_types(const RunConfig& cfg, const std::string& out_dir,
                           std::ostream& os) {
    OrbitDistribution dist = detail::config_distribution(cfg);
    TypeQuery q;
    q.params = cfg.params;
    q.dist = dist;
    q.block_len = cfg.block_len;
    std::vector<RowType> types = enumerate_types(q);
    os << types.size() << " row type(s) for block orbit length " << cfg.block_len
       << "\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const RowType& t : types) {
        for (std::size_t c = 0; c < t.entries.size(); ++c)
            os << (c ? " " : "  ") << t.entries[c];
        os << "\n";
        arr.push_back(t.entries);
    }
    RunResult res;
    res.manifest = detail::base_manifest(cfg, "types");
    res.manifest["block_len"] = cfg.block_len;
    res.manifest["type_count"] = types.size();
    res.manifest["types"] = arr;
    detail::write_manifest(out_dir, res.manifest);
    return res;
}

inline RunResult run_search_cmd(const RunConfig& cfg, const std::string& out_dir,
                                int workers, std::ostream& os) {
    OrbitDistribution dist = detail::config_distribution(cfg);
    SearchSpec spec;
    spec.params = cfg.params;
    spec.dist = dist;
    spec.stages = cfg.stages == "flat" ? flat_stages(dist)
                                       : incident_stages(cfg.params, dist);
    spec.target_depth = cfg.target_depth;
    spec.count_only = cfg.count_only;
    spec.store_limit = cfg.store_limit;
    spec.prune_unfillable_columns = cfg.prune_unfillable;
    if (!cfg.prescribed.empty())
        spec.prescribed_rows = read_matrix_file(cfg.prescribed).rows;

    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep = run_search(spec, workers);
    auto t1 = std::chrono::steady_clock::now();
    long long wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    int target = spec.target_depth < 0 ? dist.num_block_orbits() : spec.target_depth;
    os << "depth  matrices  candidates\n";
    for (int d = 1; d <= target; ++d)
        os << std::setw(5) << d << "  " << std::setw(8) << rep.depth_counts[d] << "  "
           << std::setw(10) << rep.depth_candidates[d] << "\n";
    os << "max depth " << rep.max_depth << ", " << rep.nodes_expanded
       << " nodes expanded, " << wall_ms << " ms\n";

    RunResult res;
    res.manifest = detail::base_manifest(cfg, "search");
    res.manifest["stages"] = detail::stages_json(spec.stages);
    res.manifest["target_depth"] = target;
    res.manifest["workers"] = workers;
    res.manifest["count_only"] = spec.count_only;
    res.manifest["prune_unfillable"] = spec.prune_unfillable_columns;
    res.manifest["depth_counts"] = rep.depth_counts;
    res.manifest["depth_candidates"] = rep.depth_candidates;
    res.manifest["nodes_expanded"] = rep.nodes_expanded;
    res.manifest["max_depth"] = rep.max_depth;
    if (target == dist.num_block_orbits())
        res.manifest["complete_count"] = rep.depth_counts[target];
    res.manifest["content_hash"] = detail::hash_hex(rep.content_hash);
    res.manifest["store_limit_hit"] = rep.store_limit_hit;
    res.manifest["wall_ms"] = wall_ms;

    int written = 0;
    if (!out_dir.empty() && !spec.count_only) {
        std::filesystem::create_directories(out_dir);
        for (const PartialOrbitMatrix& m : rep.matrices) {
            std::ostringstream name;
            name << out_dir << "/m" << std::setw(5) << std::setfill('0') << ++written
                 << ".om";
            write_matrix_file(name.str(), m);
        }
    }
    res.manifest["matrices_written"] = written;
    detail::write_manifest(out_dir, res.manifest);
    res.exit_code = rep.depth_counts[target] > 0 ? 0 : 3;
    return res;
}

inline RunResult run_feasible(const RunConfig& cfg, const std::string& out_dir,
                              std::ostream& os) {
    if (cfg.group.empty()) throw std::runtime_error("config needs group");
    Group g = group_by_name(cfg.group);
    std::vector<FeasibleDistribution> fds =
        feasible_distributions(g, biplane14_fix_rules(), cfg.params.v);
    os << g.name << ": " << fds.size() << " feasible orbit length distribution(s)\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const FeasibleDistribution& fd : fds) {
        nlohmann::json item;
        item["point_sizes"] = fd.point_sizes;
        nlohmann::json fp;
        os << " ";
        for (int sz : fd.point_sizes) os << ' ' << sz;
        os << "  fixed:";
        for (auto [p, f] : fd.fixed_points) {
            fp[std::to_string(p)] = f;
            os << ' ' << p << "->" << f;
        }
        os << '\n';
        item["fixed_points"] = fp;
        arr.push_back(item);
    }
    RunResult res;
    res.manifest = detail::base_manifest(cfg, "feasible");
    res.manifest["group"] = g.name;
    res.manifest["distributions"] = arr;
    detail::write_manifest(out_dir, res.manifest);
    return res;
}

inline RunResult run_verify(const RunConfig& cfg, const std::string& out_dir,
                            std::ostream& os) {
    if (cfg.prescribed.empty()) throw std::runtime_error("config needs prescribed");
    PartialOrbitMatrix m = read_matrix_file(cfg.prescribed);
    bool complete = m.complete();
    std::vector<Violation> vs = complete ? verify_complete(m) : verify_partial(m);
    bool rational_ok = rational_verify(m, complete);
    os << cfg.prescribed << ": " << m.depth() << " row(s), "
       << (complete ? "complete" : "partial") << ", " << vs.size()
       << " violation(s), rational check " << (rational_ok ? "ok" : "FAILED") << "\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& v : vs) {
        os << "  " << v.condition << " i=" << v.i << " j=" << v.j << " lhs=" << v.lhs
           << " rhs=" << v.rhs << "\n";
        arr.push_back({{"condition", v.condition},
                       {"i", v.i},
                       {"j", v.j},
                       {"lhs", v.lhs},
                       {"rhs", v.rhs}});
    }
    RunResult res;
    res.manifest = detail::base_manifest(cfg, "verify");
    res.manifest["matrix"] = cfg.prescribed;
    res.manifest["rows"] = m.depth();
    res.manifest["complete"] = complete;
    res.manifest["violations"] = arr;
    res.manifest["rational_ok"] = rational_ok;
    detail::write_manifest(out_dir, res.manifest);
    res.exit_code = (vs.empty() && rational_ok) ? 0 : 2;
    return res;
}

inline RunResult run_canon(const RunConfig& cfg, const std::string& out_dir,
                           std::ostream& os) {
    if (cfg.prescribed.empty()) throw std::runtime_error("config needs prescribed");
    PartialOrbitMatrix m = read_matrix_file(cfg.prescribed);
    PartialOrbitMatrix c = canonical_form(m);
    EquivalenceClassKey key = equivalence_key(m);
    os << cfg.prescribed << ": class hash " << detail::hash_hex(key.hash) << "\n";
    RunResult res;
    res.manifest = detail::base_manifest(cfg, "canon");
    res.manifest["matrix"] = cfg.prescribed;
    res.manifest["class_hash"] = detail::hash_hex(key.hash);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_matrix_file(out_dir + "/canonical.om", c);
        res.manifest["canonical"] = out_dir + "/canonical.om";
    }
    detail::write_manifest(out_dir, res.manifest);
    return res;
}

inline RunResult run_oracle(const RunConfig& cfg, const std::string& out_dir,
                            std::ostream& os) {
    OrbitDistribution dist = detail::config_distribution(cfg);
    TypeQuery q;
    q.params = cfg.params;
    q.dist = dist;
    q.block_len = cfg.block_len;
    std::vector<RowType> fast = enumerate_types(q);
    std::vector<RowType> slow = brute_force_row_types(cfg.params, dist, cfg.block_len);
    auto entries_of = [](const std::vector<RowType>& ts) {
        std::vector<Row> out;
        for (const RowType& t : ts) out.push_back(t.entries);
        std::sort(out.begin(), out.end());
        return out;
    };
    bool types_agree = entries_of(fast) == entries_of(slow);
    bool matrix_ok = true;
    if (!cfg.prescribed.empty()) {
        PartialOrbitMatrix m = read_matrix_file(cfg.prescribed);
        matrix_ok = rational_verify(m, m.complete());
    }
    os << "type enumeration vs rational odometer: "
       << (types_agree ? "agree" : "DISAGREE") << " (" << fast.size() << " type(s))\n";
    if (!cfg.prescribed.empty())
        os << "rational matrix check: " << (matrix_ok ? "ok" : "FAILED") << "\n";
    RunResult res;
    res.manifest = detail::base_manifest(cfg, "oracle");
    res.manifest["block_len"] = cfg.block_len;
    res.manifest["types_agree"] = types_agree;
    res.manifest["type_count"] = fast.size();
    if (!cfg.prescribed.empty()) res.manifest["rational_ok"] = matrix_ok;
    detail::write_manifest(out_dir, res.manifest);
    res.exit_code = (types_agree && matrix_ok) ? 0 : 2;
    return res;
}

}  // namespace omf
