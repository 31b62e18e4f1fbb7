// Runs the hanoi executable and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hanoi/oracle.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HANOI_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string value_of(const std::string& out, const std::string& key) {
  const auto pos = out.find("\n" + key + "=");
  if (pos == std::string::npos) return {};
  const auto start = pos + key.size() + 2;
  return out.substr(start, out.find('\n', start) - start);
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

TEST(CliK, Examples) {
  auto r = run("k --n 4 --p 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(value_of(r.out, "r"), "2");
  EXPECT_EQ(value_of(r.out, "K"), "9");
  EXPECT_EQ(value_of(r.out, "K_dp"), "9");
  EXPECT_EQ(value_of(r.out, "delta"), "4");
  EXPECT_EQ(value_of(run("k --n 10 --p 3").out, "K"), "1023");
  EXPECT_EQ(value_of(run("k --n 1 --p 7").out, "K"), "1");
  const auto j = nlohmann::json::parse(run("k --n 4 --p 4 --format json").out);
  EXPECT_EQ(j["K"], 9);
  EXPECT_EQ(value_of(run("k --n 300 --p 3").out, "K").size(), 91u);  // 2^300 - 1
}

TEST(CliK, UsageErrors) {
  EXPECT_EQ(run("k --n 4 --p 2").status, 2);
  EXPECT_EQ(run("k --p 4").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(CliSolve, MoveCounts) {
  auto r = run("solve --n 3 --p 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(count_lines(r.out), 8u);
  EXPECT_NE(r.out.find("# length=7 valid=true"), std::string::npos);
  r = run("solve --n 4 --p 4");
  EXPECT_EQ(r.out, "1:1>3\n2:1>2\n3:1>4\n2:2>4\n4:1>2\n2:4>1\n3:4>2\n2:1>2\n1:3>2\n# length=9 valid=true\n");
  r = run("solve --n 1 --p 5");
  EXPECT_EQ(r.out, "1:1>2\n# length=1 valid=true\n");
}

TEST(CliSolve, JsonReplays) {
  const auto r = run("solve --n 5 --p 4 --from 2 --to 4 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["length"], 13);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["moves"].size(), 13u);
  EXPECT_EQ(j["moves"][0]["triple"][2], "inf");
}

TEST(CliSolve, BadPegsAndOverflow) {
  EXPECT_EQ(run("solve --n 3 --p 4 --from 2 --to 2").status, 2);
  EXPECT_EQ(run("solve --n 3 --p 4 --to 9").status, 2);
  EXPECT_EQ(run("solve --n 80 --p 3").status, 2);
}

TEST(CliOracle, Examples) {
  auto r = run("oracle --n 5 --p 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(value_of(r.out, "M"), "31");
  EXPECT_EQ(value_of(run("oracle --n 4 --p 4").out, "M"), "9");
  EXPECT_EQ(run("oracle --n 20 --p 4").status, 3);
  EXPECT_EQ(run("oracle --n 6 --p 4", "HANOI_MEMORY_GIB=0.000001").status, 3);
  EXPECT_EQ(run("oracle --n 6 --p 4 --memory-gib 1", "HANOI_MEMORY_GIB=0.000001").status, 0);
}

TEST(CliOracle, WritesDistanceTable) {
  const auto path = std::filesystem::temp_directory_path() / "hanoi_cli_test_table.bin";
  ASSERT_EQ(run("oracle --n 3 --p 4 --distance-table " + path.string()).status, 0);
  std::ifstream in(path, std::ios::binary);
  const auto table = hanoi::read_distance_table(in);
  EXPECT_EQ(table.entries.size(), 64u);
  EXPECT_EQ(table.entries[hanoi::encode(hanoi::State::constant(3, 4, 2)).code], 5u);
  std::filesystem::remove(path);
}

TEST(CliVerify, SmallSweep) {
  const auto r = run("verify --n-max 6 --p-max 4 --samples 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(count_lines(r.out), 13u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,p,r,K,M,match,demolish_len,t31,t32,t41,states_expanded,ms");
  EXPECT_NE(r.out.find("\n6,3,6,63,63,true,31,true,true,true,"), std::string::npos);
  EXPECT_NE(r.out.find("\n1,4,1,1,1,true,0,true,true,true,"), std::string::npos);
}

TEST(CliVerify, JobsDoNotChangeOutput) {
  auto strip = [](std::string s) {
    std::string out;
    std::size_t start = 0;
    while (start < s.size()) {
      const auto end = s.find('\n', start);
      const auto line = s.substr(start, end - start);
      out += line.substr(0, line.rfind(',')) + "\n";
      start = end + 1;
    }
    return out;
  };
  const auto a = run("verify --n-max 5 --p-max 5 --samples 4 --jobs 1");
  const auto b = run("verify --n-max 5 --p-max 5 --samples 4 --jobs 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(CliVerify, SkipsCellsOverBudget) {
  const auto r = run("verify --n-max 7 --p-max 4 --p-min 4 --memory-gib 0.0002 --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[5]["M"], 17);  // 4^6 * 16 bytes fits in ~210 KB
  EXPECT_EQ(j[6]["M"], "skipped");
}

TEST(CliAnalyze, Examples) {
  auto r = run("analyze --n 3 --p 3");
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["theorem31_ok"], true);
  EXPECT_EQ(j["demolish_len"], 3);
  r = run("analyze --n 1 --p 4");
  EXPECT_EQ(r.status, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["theorem31_ok"], true);
  EXPECT_EQ(j["theorem32_ok"], true);
  EXPECT_EQ(j["theorem41_ok"], true);
  EXPECT_EQ(run("analyze --n 20 --p 5").status, 3);
}

TEST(CliAnalyze, SevenFour) {
  const auto r = run("analyze --n 7 --p 4 --samples 50");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["M"], 25);
  EXPECT_EQ(j["K"], 25);
  EXPECT_EQ(j["conjecture"], "verified");
  for (const char* key : {"theorem31_ok", "theorem32_ok", "theorem41_ok"}) EXPECT_EQ(j[key], true) << key;
}

}  // namespace
