#pragma once

// Run configuration for the obill command line and its key = value file format.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace obill::cli {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lines of `key = value`; `[section]` headers prefix later keys with
// "section.". Blank lines and lines starting with '#' are skipped. Values may
// be double-quoted with \" and \\ escapes; unquoted values are trimmed.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
KeyValues parse_key_values(std::istream& in);
KeyValues parse_key_values(const std::string& text);

struct RunConfig {
    std::string command;
    std::string table;
    std::string point;   // "x,y"
    std::string window;  // "x0,y0,x1,y1"
    int width = 64;
    int height = 64;
    std::uint64_t budget = 100000;
    std::string output;
    int workers = 1;
    std::uint64_t seed = 1;
    std::string target;
    int depth = 3;
    std::string format;
    std::string golden;
    std::uint64_t samples = 100;
    std::string suite = "all";
    std::string svg;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Keys are the field names, except width and height which travel together as
// `resolution = WxH`. Unknown keys and malformed numbers throw ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string to_text(const RunConfig& cfg);
// Applies one key; used for both files and command-line overrides.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);
// Checks ranges: positive budget, resolution and workers, depth >= 1.
void validate(const RunConfig& cfg);

}  // namespace obill::cli
