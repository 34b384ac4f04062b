// End-to-end tests spawning the real CLI binary.
#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with the given arguments, capturing stdout; stderr is discarded.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ORDWALK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    return testing::TempDir() + "ordwalk_cli_" + tag + "_" + std::to_string(getpid());
}

TEST(CliClasses, TableForN3) {
    const RunResult r = run_cli("classes --n 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "123\t1\t123\n132\t2\t132 213\n231\t2\t231 312\n321\t1\t321\n");
}

TEST(CliClasses, SingleClassForN1) {
    const RunResult r = run_cli("classes --n 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1\t1\t1\n");
}

TEST(CliClasses, BudgetViolationExitsTwo) {
    EXPECT_EQ(run_cli("classes --n 12").exit_code, 2);
}

TEST(CliClasses, WritesOutputFile) {
    const std::string path = temp_path("classes");
    const RunResult r = run_cli("classes --n 2 --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(slurp(path), "12\t1\t12\n21\t1\t21\n");
    std::remove(path.c_str());
}

TEST(CliClasses, JsonOutput) {
    const RunResult r = run_cli("classes --n 3 --json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.front(), '{');
    EXPECT_NE(r.out.find("\"class_count\": 4"), std::string::npos);
}

TEST(CliCheck, EquivalentPairExitsZero) {
    const RunResult r = run_cli("check 54621873 73218465");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "EQUIVALENT\n");
}

TEST(CliCheck, WitnessReplay) {
    const RunResult r = run_cli("check 5712634 6371245 --witness");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "EQUIVALENT\n5712634 [2,7] -> 5637124\n5637124 [4,6] -> 6371245\n");
}

TEST(CliCheck, InequivalentPairExitsOne) {
    const RunResult r = run_cli("check 132 231");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "NOT EQUIVALENT\n");
}

TEST(CliCheck, EqualPatternsEmptyWitness) {
    const RunResult r = run_cli("check 132 132 --witness");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "EQUIVALENT\n");
}

TEST(CliCheck, MalformedPatternExitsTwo) {
    // not a permutation: digit 3 repeats
    EXPECT_EQ(run_cli("check 54621873 73218463").exit_code, 2);
    EXPECT_EQ(run_cli("check 54621873").exit_code, 2);
}

TEST(CliStructure, WorkedExamples) {
    const RunResult r = run_cli("structure 1327564");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("irreducible_borders: 1,4,7"), std::string::npos);

    const RunResult big = run_cli("structure 197862435");
    EXPECT_EQ(big.exit_code, 0);
    EXPECT_NE(big.out.find("cohesive_intervals: [1,2] [1,6] [1,9] [2,5] [2,6] [5,6] [6,9]"),
              std::string::npos);

    const RunResult tiny = run_cli("structure 12");
    EXPECT_EQ(tiny.exit_code, 0);
    EXPECT_NE(tiny.out.find("irreducible_borders: 1,2"), std::string::npos);

    EXPECT_EQ(run_cli("structure 1232").exit_code, 2);
}

TEST(CliStructure, JsonOutput) {
    const RunResult r = run_cli("structure 2413 --json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.front(), '{');
}

TEST(CliSimulate, DeterministicAcrossWorkerCounts) {
    const std::string p1 = temp_path("w1"), p4 = temp_path("w4");
    const RunResult a =
        run_cli("simulate --n 3 --dist gaussian:0,1 --trials 20000 --seed 9 --workers 1 --out " + p1);
    const RunResult b =
        run_cli("simulate --n 3 --dist gaussian:0,1 --trials 20000 --seed 9 --workers 4 --out " + p4);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(b.exit_code, 0);
    const std::string c1 = slurp(p1), c4 = slurp(p4);
    EXPECT_FALSE(c1.empty());
    EXPECT_EQ(c1, c4);
    // the class report still goes to stdout
    EXPECT_NE(a.out.find("# ordwalk-class-report v1"), std::string::npos);
    EXPECT_EQ(a.out, b.out);
    std::remove(p1.c_str());
    std::remove(p4.c_str());
}

TEST(CliSimulate, PositiveStepsGiveSingleAscendingPattern) {
    const RunResult r = run_cli("simulate --n 4 --dist shifted-uniform:1,2 --trials 1000 --seed 2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("1234,1000,1.000000000,1234"), std::string::npos);
    EXPECT_NE(r.out.find("missing_patterns: "), std::string::npos);
}

TEST(CliSimulate, PlotDataFile) {
    const std::string path = temp_path("plot");
    const RunResult r = run_cli(
        "simulate --n 3 --dist uniform:-1,1 --trials 500 --seed 1 --plot-data " + path);
    EXPECT_EQ(r.exit_code, 0);
    const std::string plot = slurp(path);
    EXPECT_EQ(plot.substr(0, 20), "# ordwalk-plot-data ");
    EXPECT_NE(plot.find("pattern,frequency,class_representative"), std::string::npos);
    std::remove(path.c_str());
}

TEST(CliSimulate, JsonDocument) {
    const RunResult r =
        run_cli("simulate --n 3 --dist exponential:1 --trials 100 --seed 3 --json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.front(), '{');
    EXPECT_NE(r.out.find("\"tie_rejections\": 0"), std::string::npos);
}

TEST(CliSimulate, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli("simulate --n 3 --dist bogus:1 --trials 10").exit_code, 2);
    EXPECT_EQ(run_cli("simulate --n 3 --dist gaussian:0,1 --trials 0").exit_code, 2);
    EXPECT_EQ(run_cli("simulate --n 3 --trials 10").exit_code, 2); // missing --dist
}

TEST(CliGeneral, VersionString) {
    const RunResult r = run_cli("--version");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "ordwalk 1.0.0\n");
}

TEST(CliGeneral, HelpExitsZeroUnknownsExitTwo) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
    EXPECT_EQ(run_cli("classes --help").exit_code, 0);
    EXPECT_EQ(run_cli("").exit_code, 2);          // a subcommand is required
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("classes --n 3 --bogus").exit_code, 2);
}

} // namespace
