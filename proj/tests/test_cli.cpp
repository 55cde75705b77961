#include "commands.hpp"
#include "run_config.hpp"

#include <nlohmann/json.hpp>
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace obill::cli;

namespace {

const std::string kFixtures = OBILL_FIXTURES_DIR;
const std::string kBinary = OBILL_BINARY;

std::string random_text(std::mt19937_64& rng) {
    static const std::string alphabet = "abcXYZ019 ,./-_=#\"\\'[]*+";
    std::string s;
    const auto n = rng() % 12;
    for (std::size_t i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
}

RunConfig random_config(std::mt19937_64& rng) {
    RunConfig c;
    c.command = kCommands[rng() % kCommands.size()];
    c.table = random_text(rng);
    c.point = random_text(rng);
    c.window = random_text(rng);
    c.width = 1 + static_cast<int>(rng() % 4096);
    c.height = 1 + static_cast<int>(rng() % 4096);
    c.budget = 1 + rng() % 100000000;
    c.output = random_text(rng);
    c.workers = 1 + static_cast<int>(rng() % 64);
    c.seed = rng();
    c.target = random_text(rng);
    c.depth = 1 + static_cast<int>(rng() % 9);
    c.format = random_text(rng);
    c.golden = random_text(rng);
    c.samples = 1 + rng() % 10000;
    c.suite = random_text(rng);
    c.svg = random_text(rng);
    return c;
}

struct CommandResult {
    int code;
    std::string out;
    std::string err;
};

CommandResult run(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run_command(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(const std::string& text) { return parse_config(text); }

int run_binary(const std::string& args) {
    const int status = std::system((kBinary + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("obill_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Config, ParsesKeysCommentsAndQuotes) {
    const RunConfig c = config(
        "# run\n"
        "command = orbit\n"
        "table = \"square\"   \n"
        "point = \"1/2,3/2\"\n"
        "resolution = 10x20\n"
        "budget = 500\n"
        "output = \"a \\\"quoted\\\" name\"\n");
    EXPECT_EQ(c.command, "orbit");
    EXPECT_EQ(c.table, "square");
    EXPECT_EQ(c.point, "1/2,3/2");
    EXPECT_EQ(c.width, 10);
    EXPECT_EQ(c.height, 20);
    EXPECT_EQ(c.budget, 500u);
    EXPECT_EQ(c.output, "a \"quoted\" name");
    EXPECT_EQ(c.workers, 1);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(config("colour = red\n"), ConfigError);
    EXPECT_THROW(config("budget = ten\n"), ConfigError);
    EXPECT_THROW(validate(config("budget = 0\n")), ConfigError);
    EXPECT_THROW(config("resolution = 10\n"), ConfigError);
    EXPECT_THROW(config("just a line\n"), ConfigError);
    EXPECT_THROW(validate(config("workers = -2\n")), ConfigError);
    EXPECT_THROW(validate(config("resolution = 0x5\n")), ConfigError);
    EXPECT_NO_THROW(validate(config("workers = 8\n")));
    EXPECT_THROW(load_config("/nonexistent/run.toml"), ConfigError);
}

TEST(Config, TextRoundTrip) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const RunConfig c = random_config(rng);
        const std::string text = to_text(c);
        ASSERT_EQ(parse_config(text), c) << text;
        ASSERT_EQ(to_text(parse_config(text)), text);
    }
}

TEST(Config, LoadsFixtureFiles) {
    const RunConfig c = load_config(kFixtures + "/scan_octagon.toml");
    EXPECT_EQ(c.command, "scan");
    EXPECT_EQ(c.width, 32);
    EXPECT_EQ(c.window, "-3,-3,3,3");
}

TEST(ExitCodes, Success) {
    const CommandResult r = run(load_config(kFixtures + "/orbit_square.toml"));
    EXPECT_EQ(r.code, kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    const auto head = nlohmann::json::parse(first);
    EXPECT_EQ(head.at("outcome"), "periodic");
    EXPECT_EQ(head.at("steps"), 4);
}

TEST(ExitCodes, BadInput) {
    EXPECT_EQ(run(config("command = orbit\ntable = square\npoint = \"1/2,1/2\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = orbit\ntable = square\npoint = \"1/2;3/2\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = orbit\ntable = heptagon\npoint = \"3,3\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = orbit\ntable = square\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = orbit\ntable = octagon\npoint = \"3,sqrt3\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = return-table\ntarget = huge\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = scan\ntable = square\nwindow = \"0,0,1\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = component\ntable = square\npoint = \"0,2\"\n")).code, kExitBadInput);
    EXPECT_EQ(run(config("command = orbit\ntable = square\npoint = \"1/2,3/2\"\nbudget = 0\n")).code, kExitBadInput);
}

TEST(ExitCodes, Usage) {
    EXPECT_EQ(run(config("command = fly\n")).code, kExitUsage);
    EXPECT_EQ(run(RunConfig{}).code, kExitUsage);
}

TEST(ExitCodes, ForcedGoldenMismatchFails) {
    const std::string golden = kFixtures + "/corrupted_golden.toml";
    const CommandResult tables = run(config("command = tables\nworkers = 2\ngolden = \"" + golden + "\"\n"));
    EXPECT_EQ(tables.code, kExitFailure);
    EXPECT_NE(tables.err.find("small"), std::string::npos) << tables.err;

    const CommandResult verify = run(config("command = verify\nsuite = dodecagon\nsamples = 10\ngolden = \"" + golden + "\"\n"));
    EXPECT_EQ(verify.code, kExitFailure);
    const auto report = nlohmann::json::parse(verify.out);
    EXPECT_FALSE(report.at("passed").get<bool>());
}

TEST(ExitCodes, BinaryEndToEnd) {
    EXPECT_EQ(run_binary(""), kExitUsage);
    EXPECT_EQ(run_binary("orbit --no-such-flag"), kExitUsage);
    EXPECT_EQ(run_binary("-c " + kFixtures + "/orbit_square.toml"), kExitOk);
    EXPECT_EQ(run_binary("orbit --table square --point 1/2,3/2"), kExitOk);
    EXPECT_EQ(run_binary("orbit --table square --point 1/2,1/2"), kExitBadInput);
    EXPECT_EQ(run_binary("orbit --table square --point 1/2,3/2 --budget zero"), kExitBadInput);
    EXPECT_EQ(run_binary("-c /nonexistent.toml orbit"), kExitBadInput);
    EXPECT_EQ(run_binary("tables --golden " + kFixtures + "/corrupted_golden.toml"), kExitFailure);
}

TEST(Outputs, OrbitSvgCarriesExactValues) {
    const auto dir = scratch_dir("svg");
    const std::string svg = (dir / "orbit.svg").string();
    const CommandResult r = run(config("command = orbit\ntable = octagon\npoint = \"3,1/2\"\nbudget = 200\nsvg = \"" + svg + "\"\n"));
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream in(svg);
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_NE(text.find("<svg"), std::string::npos);
    EXPECT_NE(text.find("<!-- exact:"), std::string::npos);
    EXPECT_NE(text.find("sqrt2"), std::string::npos);
}

TEST(Outputs, ReturnTableCsv) {
    const CommandResult r = run(config("command = return-table\ntarget = middle\nformat = csv\n"));
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "sides,3,4,4,4,4,3,4,4\nreturn_time,1,1,1,1,10,25,27,53\n");
}

TEST(Determinism, ScanAcrossWorkers) {
    RunConfig c = load_config(kFixtures + "/scan_octagon.toml");
    const CommandResult one = run(c);
    ASSERT_EQ(one.code, kExitOk) << one.err;
    for (int workers : {4, 8}) {
        c.workers = workers;
        const CommandResult many = run(c);
        EXPECT_EQ(many.code, kExitOk);
        EXPECT_EQ(many.out, one.out) << workers << " workers";
    }
    c.format = "svg";
    c.workers = 1;
    const std::string svg1 = run(c).out;
    c.workers = 8;
    EXPECT_EQ(run(c).out, svg1);
}

TEST(Determinism, TablesAcrossWorkers) {
    std::map<int, std::string> stdout_text;
    std::map<int, std::map<std::string, std::string>> files;
    for (int workers : {1, 4, 8}) {
        const auto dir = scratch_dir("tables_" + std::to_string(workers));
        RunConfig c = config("command = tables\n");
        c.workers = workers;
        const CommandResult to_stdout = run(c);
        ASSERT_EQ(to_stdout.code, kExitOk) << to_stdout.err;
        stdout_text[workers] = to_stdout.out;
        c.output = dir.string();
        ASSERT_EQ(run(c).code, kExitOk);
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            std::ifstream in(entry.path());
            files[workers][entry.path().filename().string()] = std::string((std::istreambuf_iterator<char>(in)), {});
        }
    }
    EXPECT_EQ(files[1].size(), 9u);
    EXPECT_EQ(stdout_text[4], stdout_text[1]);
    EXPECT_EQ(stdout_text[8], stdout_text[1]);
    EXPECT_EQ(files[4], files[1]);
    EXPECT_EQ(files[8], files[1]);
}
