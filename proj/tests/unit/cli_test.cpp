#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jacquet/cli.hpp"
#include "jacquet/io.hpp"

using jacquet::run_cli;

namespace {

const std::string kData = JACQUET_TEST_DATA;
const std::string kGolden = JACQUET_GOLDEN_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Whitespace-separated words; "" is an empty word.
std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        if (i >= line.size()) break;
        std::string word;
        if (line[i] == '"') {
            const auto close = line.find('"', i + 1);
            word = line.substr(i + 1, close - i - 1);
            i = close + 1;
        } else {
            const auto end = line.find(' ', i);
            word = line.substr(i, end == std::string::npos ? std::string::npos : end - i);
            i = end == std::string::npos ? line.size() : end;
        }
        const auto at = word.find("{data}");
        if (at != std::string::npos) word.replace(at, 6, kData);
        out.push_back(word);
    }
    return out;
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> out;
    std::ifstream in(kGolden + "/cases.txt");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        std::string name = line.substr(0, bar);
        name.erase(name.find_last_not_of(' ') + 1);
        out.push_back({name, split_args(line.substr(bar + 1))});
    }
    return out;
}

}  // namespace

TEST(Cli, GoldenOutputs) {
    const auto cases = golden_cases();
    ASSERT_FALSE(cases.empty());
    for (const auto& c : cases) {
        const CliRun r = cli(c.args);
        EXPECT_EQ(r.code, 0) << c.name << ": " << r.err;
        EXPECT_EQ(r.out, slurp(kGolden + "/" + c.name + ".txt")) << c.name;
    }
}

TEST(Cli, ByteStableAcrossRuns) {
    for (const auto& c : golden_cases()) EXPECT_EQ(cli(c.args).out, cli(c.args).out) << c.name;
}

TEST(Cli, PacketJsonReparsesAsInput) {
    const CliRun r = cli({"packet", "--phi", kData + "/s2_s4_s6.json", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto all = nlohmann::json::parse(r.out);
    ASSERT_EQ(all.size(), 4u);
    for (const auto& member : all) {
        const auto doc = jacquet::parse_input(member);
        ASSERT_TRUE(doc.eta.has_value());
        EXPECT_EQ(doc.phi.summands.size(), 3u);
    }
}

TEST(Cli, JsonOutputsParse) {
    const std::string phi = kData + "/s2_s4_s4.json";
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"jac", "--phi", phi, "--x", "3/2,1/2", "--format", "json"},
             {"mu-star", "--phi", phi, "--format", "json"},
             {"jac-pk", "--phi", phi, "--eta", "1,1,1", "--degree", "3", "--format", "json"},
             {"generic", "--phi", phi, "--format", "json"},
             {"std-irred", "--phi", phi, "--x", "5/2", "--format", "json"}}) {
        const CliRun r = cli(args);
        ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_FALSE(j.is_null()) << args[0];
        // Labels inside results re-parse as input documents.
        if (args[0] == "jac" || args[0] == "mu-star") {
            for (const auto& member : j) {
                for (const auto& term : member.at("result")) {
                    EXPECT_NO_THROW(jacquet::parse_input(term.at("label").at("core")));
                }
            }
        }
    }
}

TEST(Cli, InputErrorsExitTwo) {
    const std::string phi = kData + "/s2_s4_s4.json";
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"nonsense"},
        {"packet"},
        {"packet", "--phi", kData + "/does_not_exist.json"},
        {"packet", "--phi", phi, "--format", "xml"},
        {"jac", "--phi", phi},
        {"jac", "--phi", phi, "--x", "1/3"},
        {"jac", "--phi", phi, "--x", "1/2", "--rho", "zz"},
        {"jac", "--phi", phi, "--x", "1/2", "--eta", "1,1"},
        {"jac", "--phi", phi, "--x", "1/2", "--eta", "1,1,-1"},
        {"jac", "--phi", phi, "--x", "1/2", "--eta", "1,x,1"},
        {"jac-pk", "--phi", phi, "--degree", "6"},
        {"jac-pk", "--phi", phi, "--degree", "-1"},
        {"jac-pk", "--phi", phi, "--degree", "two"},
        {"std-irred", "--phi", phi},
        {"std-irred", "--phi", phi, "--x", "0"},
        {"std-irred", "--phi", phi, "--x", "1/2,3/2"},
    };
    for (const auto& args : bad) {
        const CliRun r = cli(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        EXPECT_EQ(r.code, 2) << joined << "\n" << r.out << r.err;
        EXPECT_FALSE(r.err.empty()) << joined;
    }
}

TEST(Cli, MalformedDocumentsExitTwoWithPointer) {
    const auto dir = std::string(::testing::TempDir());
    const std::vector<std::pair<std::string, std::string>> docs = {
        {"{", "/"},
        {"[]", "/"},
        {R"({"group": "SOodd", "phi": [["1", 3]]})", "/phi/0"},
        {R"({"group": "SOodd", "phi": [["1", "x"]]})", "/phi/0/1"},
        {R"({"group": "SOodd", "phi": [["1", 2]], "eta": "+"})", "/eta"},
        {R"({"group": "SOodd", "phi": [["1", 2]], "segments": [7]})", "/segments/0"},
        {R"({"group": 3, "phi": []})", "/group"},
    };
    int i = 0;
    for (const auto& [text, pointer] : docs) {
        const std::string path = dir + "/malformed_" + std::to_string(i++) + ".json";
        std::ofstream(path) << text;
        const CliRun r = cli({"packet", "--phi", path});
        EXPECT_EQ(r.code, 2) << text;
        EXPECT_NE(r.err.find("at " + pointer), std::string::npos) << text << " -> " << r.err;
    }
}

TEST(Cli, NonGenericStandardExitsThree) {
    const CliRun r = cli({"mu-star", "--phi", kData + "/s2_s4_s6_standard.json"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("unsupported"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
    const CliRun r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("mu-star"), std::string::npos);
}
