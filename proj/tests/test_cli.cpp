#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = retro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("retro_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::vector<std::string> lines_of(const std::string& file) {
    std::ifstream in(file);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  }

  fs::path dir_;
};

std::string drop_wall_ns(const std::string& row) {
  std::vector<std::string> cols;
  std::stringstream in(row);
  for (std::string c; std::getline(in, c, ',');) cols.push_back(c);
  if (cols.size() > 8) cols.erase(cols.begin() + 8);
  std::string out;
  for (const auto& c : cols) out += c + ',';
  return out;
}

}  // namespace

TEST_F(CliTest, VerifyAllStrategies) {
  const auto r = run({"verify", "--instance", "minplus", "--ops", "1000", "--queries", "200", "--seed", "42",
                      "--strategy", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("checkpoint"), std::string::npos);
  EXPECT_NE(r.out.find("wbt"), std::string::npos);
  EXPECT_NE(r.out.find("auto"), std::string::npos);
}

TEST_F(CliTest, VerifyOtherFamilies) {
  for (const char* family : {"3sum", "csat"}) {
    const auto r = run({"verify", "--instance", family, "--ops", "300", "--queries", "60", "--seed", "3"});
    EXPECT_EQ(r.code, 0) << family << r.err;
  }
}

TEST_F(CliTest, VerifyUnknownInstance) { EXPECT_EQ(run({"verify", "--instance", "bogus"}).code, 2); }

TEST_F(CliTest, VerifyZeroOps) { EXPECT_EQ(run({"verify", "--instance", "minplus", "--ops", "0"}).code, 0); }

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--instance", "minplus", "--strategy", "oracle"}).code, 2);
  EXPECT_EQ(run({"bench", "--instance", "minplus", "--m-range", "1000:4096", "--out", path("x.csv")}).code, 2);
  EXPECT_EQ(run({"bench", "--instance", "minplus", "--m-range", "4096:1024", "--out", path("x.csv")}).code, 2);
  EXPECT_EQ(run({"bench", "--instance", "minplus", "--m-range", "nonsense", "--out", path("x.csv")}).code, 2);
}

TEST_F(CliTest, BenchWritesOneRowPerDoubling) {
  const auto csv = path("r.csv");
  const auto r = run({"bench", "--instance", "minplus", "--m-range", "1024:4096", "--strategy", "checkpoint",
                      "--out", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(csv);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "family,strategy,n,m,updates,queries,base_apply_calls,base_eval_calls,wall_ns,seed");
  EXPECT_EQ(lines[1].rfind("minplus,checkpoint,8,1024,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("minplus,checkpoint,8,2048,", 0), 0u);
  EXPECT_EQ(lines[3].rfind("minplus,checkpoint,8,4096,", 0), 0u);

  ASSERT_EQ(run({"bench", "--instance", "minplus", "--m-range", "1024:4096", "--strategy", "checkpoint", "--out",
                 csv})
                .code,
            0);
  const auto again = lines_of(csv);
  ASSERT_EQ(again.size(), 7u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(again[i], lines[i]);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(drop_wall_ns(again[i + 3]), drop_wall_ns(lines[i]));
}

TEST_F(CliTest, BenchDeterministicExceptWallTime) {
  const auto a = path("a.csv");
  const auto b = path("b.csv");
  for (const auto& file : {a, b}) {
    ASSERT_EQ(run({"bench", "--instance", "3sum", "--m-range", "256:512", "--strategy", "all", "--seed", "9",
                   "--out", file, "--jobs", file == a ? "1" : "3"})
                  .code,
              0);
  }
  const auto la = lines_of(a);
  const auto lb = lines_of(b);
  ASSERT_EQ(la.size(), 7u);
  ASSERT_EQ(lb.size(), la.size());
  for (std::size_t i = 0; i < la.size(); ++i) EXPECT_EQ(drop_wall_ns(la[i]), drop_wall_ns(lb[i]));
  EXPECT_NE(la[1].find(",9"), std::string::npos);
}

TEST_F(CliTest, BenchSeedFromEnvironment) {
  const auto csv = path("env.csv");
  ::setenv("RETRO_SEED", "1234", 1);
  const auto r = run({"bench", "--instance", "csat", "--m-range", "64:64", "--strategy", "wbt", "--out", csv});
  ::unsetenv("RETRO_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(csv);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1].substr(lines[1].rfind(',') + 1), "1234");
}

TEST_F(CliTest, BenchUnwritableOutput) {
  const auto r = run({"bench", "--instance", "minplus", "--m-range", "64:64", "--out",
                      (dir_ / "missing" / "dir" / "r.csv").string()});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, ReduceThreeSum) {
  const auto file = write("t.txt", "-3\n1\n2\n");
  const auto r = run({"reduce", "3sum", "--input", file, "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "TRUE\n");
  const auto no = write("f.txt", "1 5\n1 6\n1 7\n");
  EXPECT_EQ(run({"reduce", "3sum", "--input", no, "--strategy", "wbt"}).out, "FALSE\n");
}

TEST_F(CliTest, ReduceMinPlus) {
  const auto file = write("m.txt", "1\n2\n3\n");
  const auto r = run({"reduce", "minplus", "--input", file, "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
  const auto two = write("m2.txt", "2\n0 10\n10 0\n1 2\n7 3\n");
  EXPECT_EQ(run({"reduce", "minplus", "--input", two, "--strategy", "checkpoint"}).out, "1 2\n7 3\n");
}

TEST_F(CliTest, ReduceCsat) {
  const auto file = write("c.net", "INPUTS 2\nIN 0\nNOT 0\nAND 0 1\nCONST 1\nAND 2 3\n");
  const auto r = run({"reduce", "csat", "--input", file, "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "UNSAT\n");
  const auto sat = write("s.net", "INPUTS 2\nIN 0\nIN 1\nAND 0 1");
  EXPECT_EQ(run({"reduce", "csat", "--input", sat, "--strategy", "oracle"}).out, "SAT\n");
}

TEST_F(CliTest, ReduceInputErrors) {
  EXPECT_EQ(run({"reduce", "3sum", "--input", path("absent.txt")}).code, 3);
  EXPECT_EQ(run({"reduce", "3sum", "--input", write("bad.txt", "1 x\n2 3\n4 5\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "3sum", "--input", write("two.txt", "1\n2\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "minplus", "--input", write("short.txt", "2\n1 2\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "csat", "--input", write("odd.net", "INPUTS 1\nIN 0\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "csat", "--input", write("fwd.net", "INPUTS 2\nIN 0\nAND 0 7\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "csat", "--input", write("junk.net", "hello\n")}).code, 2);
  EXPECT_EQ(run({"reduce", "knapsack", "--input", write("k.txt", "1\n")}).code, 2);
}
