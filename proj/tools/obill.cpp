#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace obill::cli;
    CLI::App app{"Exact outer billiards: orbits, scans, components, return tables and renormalization checks"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    app.add_option("-c,--config", config_path, "key = value run configuration file");

    // Every RunConfig key is also a flag; given flags override the file.
    const std::vector<std::pair<std::string, std::string>> keys{
        {"table", "square | triangle_lattice | hexagon_lattice | octagon | dodecagon"},
        {"point", "start point 'x,y', exact, e.g. '1/2,3/2' or '1+sqrt3,-1/2'"},
        {"window", "scan window 'x0,y0,x1,y1', exact"},
        {"resolution", "scan resolution WxH"},
        {"budget", "maximum number of steps"},
        {"output", "output file (directory for tables)"},
        {"workers", "worker threads"},
        {"seed", "seed for sample generation"},
        {"target", "rocket target: small | small-small | middle | small-middle | airplane | small-airplane | zone0 | middle-zone0"},
        {"depth", "witness depth (number of contraction steps)"},
        {"format", "output format: jsonl, json, csv, pgm or svg depending on the command"},
        {"golden", "golden table override file"},
        {"samples", "random samples per check"},
        {"suite", "verify suite: all | billiard | octagon | dodecagon"},
        {"svg", "additional SVG output file"},
    };
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    for (const auto& [key, help] : keys) options[key] = app.add_option("--" + key, values[key], help);

    const std::map<std::string, std::string> descriptions{
        {"orbit", "orbit dump as JSON lines, optional SVG"},
        {"scan", "classification raster of a window (PGM or SVG)"},
        {"component", "periodic component of a point (JSON or SVG)"},
        {"return-table", "first-return partition of a dodecagon rocket target (CSV, JSON or SVG)"},
        {"tables", "all reference tables as CSV; exit 1 on disagreement with golden values"},
        {"verify", "verification suites as a JSON report; exit 1 on failure"},
        {"witness", "aperiodic witness chain (octagon or dodecagon) as JSON, optional SVG"},
    };
    for (const auto& name : kCommands) app.add_subcommand(name, descriptions.at(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        for (const auto& [key, opt] : options)
            if (opt->count() > 0) set_key(cfg, key, values[key]);
    } catch (const ConfigError& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitBadInput;
    }
    if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command.empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }
    return run_command(cfg, std::cout, std::cerr);
}
