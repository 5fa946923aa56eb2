// Command-line front end: each subcommand reads a key=value config, runs
// one unit of work and drops a manifest (plus any matrices) into --out.

#include <iostream>

#include <CLI11.hpp>

#include "omf/omf.hpp"

int main(int argc, char** argv) {
    CLI::App app{"orbit matrices of 2-(121,16,2) designs"};
    app.set_version_flag("--version", std::string(omf::kToolName) + " " + omf::kVersion);
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int workers = 1;

    auto add_common = [&](CLI::App* sub, bool with_workers) {
        sub->add_option("--config", config_path, "key=value configuration file")
            ->required();
        sub->add_option("--out", out_dir, "output directory for manifest and matrices");
        if (with_workers)
            sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* types = app.add_subcommand("types", "enumerate admissible row types");
    CLI::App* search = app.add_subcommand("search", "enumerate orbit matrices");
    CLI::App* feasible =
        app.add_subcommand("feasible", "feasible orbit length distributions of a group");
    CLI::App* verify = app.add_subcommand("verify", "re-check a matrix file");
    CLI::App* canon = app.add_subcommand("canon", "canonical form and class hash");
    CLI::App* oracle = app.add_subcommand("oracle", "cross-check against rational arithmetic");
    add_common(types, false);
    add_common(search, true);
    add_common(feasible, false);
    add_common(verify, false);
    add_common(canon, false);
    add_common(oracle, false);

    CLI11_PARSE(app, argc, argv);

    omf::RunConfig cfg;
    try {
        cfg = omf::parse_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        omf::RunResult res;
        if (types->parsed())
            res = omf::run_types(cfg, out_dir, std::cout);
        else if (search->parsed())
            res = omf::run_search_cmd(cfg, out_dir, workers, std::cout);
        else if (feasible->parsed())
            res = omf::run_feasible(cfg, out_dir, std::cout);
        else if (verify->parsed())
            res = omf::run_verify(cfg, out_dir, std::cout);
        else if (canon->parsed())
            res = omf::run_canon(cfg, out_dir, std::cout);
        else if (oracle->parsed())
            res = omf::run_oracle(cfg, out_dir, std::cout);
        return res.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
