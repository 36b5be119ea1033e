// End-to-end runs of the jchm binary: exit codes, determinism, golden output.

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"

using jchm::testing::run_cli;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> data_rows(const std::string& csv) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.starts_with("#")) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::string f;
        std::istringstream ls(line);
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run_cli("--help").status, 0); }

TEST(Cli, CriticalAtZeroDetuning) {
    const auto r = run_cli("critical --delta 0 --lobe 1");
    ASSERT_EQ(r.status, 0);
    const auto rows = data_rows(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(std::stod(rows[0][2]), 0.193, 5e-4);
    EXPECT_LE(std::stod(rows[0][4]), 1e-10);
}

TEST(Cli, CriticalAtLargeNegativeDetuning) {
    const auto r = run_cli("critical --delta -10");
    ASSERT_EQ(r.status, 0);
    EXPECT_LT(std::stod(data_rows(r.out)[0][2]), 0.01);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("").status, 2);
    EXPECT_EQ(run_cli("no-such-command").status, 2);
    EXPECT_EQ(run_cli("boundary --j-min 0.3 --j-max 0.1").status, 2);
    EXPECT_EQ(run_cli("sweep --delta-min 0 --delta-max 0 --steps 2").status, 2);
    EXPECT_EQ(run_cli("boundary --format xml").status, 2);
    EXPECT_EQ(run_cli("spectrum --g 0").status, 2);
    EXPECT_EQ(run_cli("ansatz-check --kind particle --window 250").status, 2);
    EXPECT_EQ(run_cli("critical --delta 0 --lobe 1 --j-min 0.3 --j-max 0.4").status, 3);
    EXPECT_EQ(run_cli("ed --L 20 --n-max 6 --J 0.1").status, 5);
    EXPECT_EQ(run_cli("ed --L 4 --n-max 3").status, 0);
}

TEST(Cli, MemoryCeilingFromEnvironment) {
    EXPECT_EQ(run_cli("ed --L 4 --n-max 3 --J 0.1").status, 0);
    const std::string cmd = std::string("JCHM_ED_MEMORY_LIMIT=1000 ") + JCHM_CLI_PATH + " ed --L 4 --n-max 3 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(raw), 5);
}

TEST(Cli, AnsatzCheckPasses) {
    EXPECT_EQ(run_cli("ansatz-check --kind particle --K 3").status, 0);
    EXPECT_EQ(run_cli("ansatz-check --kind hole --K 2 --window 64 --seeds 1 0 0 1").status, 0);
    const auto r = run_cli("ansatz-check --kind particle --K 3");
    EXPECT_NE(r.out.find("lambda,3,12.1961524227"), std::string::npos);
}

TEST(Cli, EdCompareTrend) {
    const auto r = run_cli("ed-compare --L 4 --n-max 3 --j-grid 0,0.05,0.1,0.15");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("# note: ED gap strictly decreasing over grid: yes"), std::string::npos);
    EXPECT_EQ(data_rows(r.out).size(), 4u);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    for (const char* args : {"boundary --steps 26", "sweep --steps 11", "spectrum --levels 5 --kind hole --J 0.2",
                             "ed-compare --L 3 --n-max 3"}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        ASSERT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, JsonMatchesCsv) {
    const auto csv = run_cli("sweep --steps 11 --format csv");
    const auto json = run_cli("sweep --steps 11 --format json");
    ASSERT_EQ(csv.status, 0);
    ASSERT_EQ(json.status, 0);
    const auto doc = nlohmann::json::parse(json.out);
    const auto rows = data_rows(csv.out);
    ASSERT_EQ(doc["rows"].size(), rows.size());
    EXPECT_EQ(doc["columns"][1], "jc_over_g");
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < rows[i].size(); ++c)
            EXPECT_EQ(doc["rows"][i][c].get<double>(), std::strtod(rows[i][c].c_str(), nullptr));
}

TEST(Cli, OutputFileMatchesStdout) {
    const auto path = (std::filesystem::temp_directory_path() / "jchm_cli_test_boundary.csv").string();
    ASSERT_EQ(run_cli("boundary --steps 6 -o " + path).status, 0);
    EXPECT_EQ(slurp(path), run_cli("boundary --steps 6").out);
    std::filesystem::remove(path);
}

TEST(Cli, BoundaryGoldenFile) {
    const auto r = run_cli("boundary --delta 0 --lobe 1 --j-min 0 --j-max 0.25 --steps 6");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, slurp(std::string(JCHM_GOLDEN_DIR) + "/boundary_delta0_lobe1.csv"));
}

TEST(Cli, SweepGoldenFile) {
    const auto r = run_cli("sweep --delta-min -10 --delta-max 0 --steps 6");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, slurp(std::string(JCHM_GOLDEN_DIR) + "/sweep_negative_detuning.csv"));
}
