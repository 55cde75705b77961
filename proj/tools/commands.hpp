#pragma once

// The obill subcommands. Each writes its artifact to cfg.output (a file, or a
// directory for `tables`) or to `out` when no output is set, and returns a
// process exit code.

#include "run_config.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace obill::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUsage = 64;

inline const std::vector<std::string> kCommands{"orbit",  "scan",   "component", "return-table",
                                                "tables", "verify", "witness"};

// Dispatches on cfg.command; maps bad input to 2 and failed checks to 1.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_orbit(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_component(const RunConfig& cfg, std::ostream& out);
int cmd_return_table(const RunConfig& cfg, std::ostream& out);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_witness(const RunConfig& cfg, std::ostream& out);

// Reference return tables keyed by target name: "<target>.sides" and
// "<target>.times" lists; a golden file overrides individual keys.
struct GoldenTable {
    std::vector<std::size_t> sides;
    std::vector<std::uint64_t> times;
};
std::map<std::string, GoldenTable> load_golden(const std::string& path);

}  // namespace obill::cli
