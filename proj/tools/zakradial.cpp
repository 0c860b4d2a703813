#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zak/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Radial Zakharov toolbox"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir, resume_path;
    std::int64_t seed = -1;
    app.add_option("--config", config_path, "run configuration file");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--seed", seed, "verifier seed (overrides config)");
    app.add_option("--resume", resume_path, "checkpoint to continue from");

    for (const char* name :
         {"simulate", "scatter-check", "verify-estimates", "resonance-map", "lp-analyze"})
        app.add_subcommand(name)->silent();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) != 0) std::cerr << zak::usage_text();
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cerr << zak::usage_text();
        return 2;
    }

    try {
        zak::RunConfig cfg =
            config_path.empty() ? zak::RunConfig{} : zak::load_config_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        return zak::dispatch(subs.front()->get_name(), cfg, resume_path);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 1;
    }
}
