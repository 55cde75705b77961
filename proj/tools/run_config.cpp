#include "run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace obill::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& v, int line) {
    if (v.empty() || v.front() != '"') return v;
    std::string out;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const char c = v[i];
        if (c == '\\' && i + 1 < v.size()) {
            out.push_back(v[++i]);
        } else if (c == '"') {
            if (i + 1 != v.size()) throw ConfigError("line " + std::to_string(line) + ": text after closing quote");
            return out;
        } else {
            out.push_back(c);
        }
    }
    throw ConfigError("line " + std::to_string(line) + ": unterminated string");
}

std::string quote(const std::string& v) {
    std::string out = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + '"';
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [p, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || p != end) throw ConfigError("bad number for " + key + ": '" + value + "'");
    return out;
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
    KeyValues out;
    std::string section;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s.front() == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("line " + std::to_string(line) + ": bad section header");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(line) + ": empty key");
        out.emplace_back(section.empty() ? key : section + "." + key, unquote(trim(s.substr(eq + 1)), line));
    }
    return out;
}

KeyValues parse_key_values(const std::string& text) {
    std::istringstream in(text);
    return parse_key_values(in);
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "command") cfg.command = value;
    else if (key == "table") cfg.table = value;
    else if (key == "point") cfg.point = value;
    else if (key == "window") cfg.window = value;
    else if (key == "resolution") {
        const auto x = value.find('x');
        if (x == std::string::npos) throw ConfigError("resolution must be WxH: '" + value + "'");
        cfg.width = parse_number<int>(key, value.substr(0, x));
        cfg.height = parse_number<int>(key, value.substr(x + 1));
    } else if (key == "budget") cfg.budget = parse_number<std::uint64_t>(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "workers") cfg.workers = parse_number<int>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "target") cfg.target = value;
    else if (key == "depth") cfg.depth = parse_number<int>(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "golden") cfg.golden = value;
    else if (key == "samples") cfg.samples = parse_number<std::uint64_t>(key, value);
    else if (key == "suite") cfg.suite = value;
    else if (key == "svg") cfg.svg = value;
    else throw ConfigError("unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    for (const auto& [k, v] : parse_key_values(text)) set_key(cfg, k, v);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string to_text(const RunConfig& cfg) {
    std::ostringstream os;
    os << "command = " << quote(cfg.command) << '\n'
       << "table = " << quote(cfg.table) << '\n'
       << "point = " << quote(cfg.point) << '\n'
       << "window = " << quote(cfg.window) << '\n'
       << "resolution = " << cfg.width << 'x' << cfg.height << '\n'
       << "budget = " << cfg.budget << '\n'
       << "output = " << quote(cfg.output) << '\n'
       << "workers = " << cfg.workers << '\n'
       << "seed = " << cfg.seed << '\n'
       << "target = " << quote(cfg.target) << '\n'
       << "depth = " << cfg.depth << '\n'
       << "format = " << quote(cfg.format) << '\n'
       << "golden = " << quote(cfg.golden) << '\n'
       << "samples = " << cfg.samples << '\n'
       << "suite = " << quote(cfg.suite) << '\n'
       << "svg = " << quote(cfg.svg) << '\n';
    return os.str();
}

void validate(const RunConfig& cfg) {
    if (cfg.budget == 0) throw ConfigError("budget must be positive");
    if (cfg.width < 1 || cfg.height < 1) throw ConfigError("resolution must be positive");
    if (cfg.workers < 1) throw ConfigError("workers must be positive");
    if (cfg.depth < 1) throw ConfigError("depth must be positive");
    if (cfg.samples == 0) throw ConfigError("samples must be positive");
}

}  // namespace obill::cli
