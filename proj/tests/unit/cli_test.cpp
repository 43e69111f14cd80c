#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "weylkit/commands.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = weylkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json envelope(const Result& r) { return json::parse(r.out); }

std::string without_timing(const std::string& text) {
  auto j = json::parse(text);
  j.erase("timing_ms");
  return j.dump();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("weylkit-cli-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, MultExamples) {
  auto r = run({"mult", "--type", "B", "--rank", "12", "--lambda", "3*w12", "--mu", "w12"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = envelope(r);
  EXPECT_EQ(j["values"]["multiplicity"], "12");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["family"], "B");

  auto table = envelope(run({"mult", "--type", "C", "--rank", "12", "--lambda", "w10"}));
  EXPECT_EQ(table["values"]["dimension"], "2000");
  bool found = false;
  for (const auto& row : table["values"]["rows"]) {
    if (row["mu"] == "w12") {
      found = true;
      EXPECT_EQ(row["multiplicity"], "10");
    }
  }
  EXPECT_TRUE(found);

  auto trivial = envelope(run({"mult", "--type", "A", "--rank", "15", "--lambda", "0"}));
  EXPECT_EQ(trivial["values"]["dimension"], "1");
  ASSERT_EQ(trivial["values"]["rows"].size(), 1u);
  EXPECT_EQ(trivial["values"]["rows"][0]["multiplicity"], "1");
}

TEST(Cli, DimExamples) {
  auto closed = envelope(run({"dim", "--type", "A", "--rank", "15", "--lambda", "w1+w15", "--p", "17", "--mode", "closed"}));
  EXPECT_EQ(closed["values"]["closed"], "255");
  auto sum = envelope(run({"dim", "--type", "C", "--rank", "12", "--lambda", "w10", "--mode", "sum"}));
  EXPECT_EQ(sum["values"]["sum"], "2000");
  auto weyl = envelope(run({"dim", "--type", "B", "--rank", "12", "--lambda", "3*w12", "--mode", "weyl"}));
  EXPECT_EQ(weyl["values"]["weyl"], "2900");
  auto unknown = envelope(run({"dim", "--type", "B", "--rank", "12", "--lambda", "w5", "--mode", "closed"}));
  EXPECT_EQ(unknown["values"]["closed"], "unknown");
}

TEST(Cli, ClassifyExamples) {
  auto d18 = envelope(run({"classify", "--type", "D", "--rank", "18"}));
  std::vector<std::string> list = d18["values"]["admissible"];
  EXPECT_EQ(std::count(list.begin(), list.end(), "w1"), 0);
  EXPECT_EQ(std::count(list.begin(), list.end(), "w2"), 0);
  EXPECT_EQ(list.size(), 9u);

  auto b12 = envelope(run({"classify", "--type", "B", "--rank", "12"}));
  EXPECT_EQ(b12["values"]["admissible"].size(), 10u);

  auto r = run({"classify", "--type", "B", "--rank", "12", "--p", "2"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, TableFormats) {
  auto csv = run({"table", "--name", "appendix-c", "--rank", "12", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "highest,mu,weight,multiplicity,orbit_length,printed_multiplicity,printed_orbit_length,status,note");
  EXPECT_NE(csv.out.find("4*w[l],0,0,78,1,"), std::string::npos);

  auto md = run({"table", "--name", "theorem-a", "--rank", "15", "--format", "md"});
  ASSERT_EQ(md.code, 0);
  EXPECT_EQ(std::count(md.out.begin(), md.out.end(), '\n') >= 22, true);
  EXPECT_NE(md.out.find("| lambda |"), std::string::npos);

  auto b3 = envelope(run({"table", "--name", "lemma-b3", "--rank", "13", "--format", "json"}));
  EXPECT_EQ(b3["operation"], "table");
  EXPECT_FALSE(b3["table"]["rows"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"mult", "--type", "B", "--rank", "12", "--lambda", "3*w13"}).code, 2);
  EXPECT_EQ(run({"mult", "--type", "Q", "--rank", "12", "--lambda", "w1"}).code, 2);
  EXPECT_EQ(run({"mult", "--type", "D", "--rank", "2", "--lambda", "w1"}).code, 2);
  EXPECT_EQ(run({"table", "--name", "nope", "--rank", "12"}).code, 2);
  EXPECT_EQ(run({"dim", "--type", "B", "--rank", "12", "--lambda", "w1", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"dim", "--type", "B", "--rank", "12", "--lambda", "w1", "--mode", "fast"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto bad = run({"mult", "--type", "B", "--rank", "12", "--lambda", "w1+"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(std::count(bad.err.begin(), bad.err.end(), '\n'), 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicModuloTiming) {
  std::vector<std::string> args{"classify", "--type", "C", "--rank", "12"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(without_timing(a.out), without_timing(b.out));
  EXPECT_LT(a.out.find("\"schema_version\""), a.out.find("\"operation\""));
  EXPECT_LT(a.out.find("\"operation\""), a.out.find("\"family\""));
  EXPECT_LT(a.out.find("\"notes\""), a.out.find("\"timing_ms\""));
}

TEST(Cli, BourbakiLabels) {
  auto r = envelope(run({"dim", "--type", "B", "--rank", "12", "--lambda", "w12", "--label-convention", "bourbaki",
                         "--mode", "weyl"}));
  EXPECT_EQ(r["values"]["weyl"], "4096");
  EXPECT_EQ(r["weights"]["lambda"], "w12");
  EXPECT_EQ(r["label_convention"], "bourbaki");
}

TEST(Cli, CacheHitTamperAndCorruption) {
  TempDir dir;
  std::vector<std::string> args{"mult", "--type", "B", "--rank", "12", "--lambda", "3*w12", "--cache-dir",
                                dir.path().string()};
  auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_NE(first.err.find("cache miss"), std::string::npos);
  fs::path entry = dir.path() / "v1" / "B12" / "0_0_0_0_0_0_0_0_0_0_0_3.json";
  ASSERT_TRUE(fs::exists(entry));

  auto second = run(args);
  EXPECT_NE(second.err.find("cache hit"), std::string::npos);
  EXPECT_EQ(without_timing(first.out), without_timing(second.out));

  std::string original = slurp(entry);
  std::string tampered = original;
  auto pos = tampered.find("\"multiplicity\":\"12\"");
  ASSERT_NE(pos, std::string::npos);
  tampered.replace(pos, 19, "\"multiplicity\":\"13\"");
  { std::ofstream(entry) << tampered; }

  auto verify_args = args;
  verify_args.push_back("--verify-cache");
  auto verified = run(verify_args);
  ASSERT_EQ(verified.code, 0);
  EXPECT_NE(verified.err.find("warning"), std::string::npos);
  EXPECT_EQ(without_timing(verified.out), without_timing(first.out));
  EXPECT_EQ(slurp(entry), original);

  { std::ofstream(entry) << "{not json"; }
  auto corrupt = run(args);
  ASSERT_EQ(corrupt.code, 0);
  EXPECT_NE(corrupt.err.find("corrupt"), std::string::npos);
  EXPECT_EQ(without_timing(corrupt.out), without_timing(first.out));
  EXPECT_EQ(slurp(entry), original);
}

TEST(Cli, NoCacheWithoutDirectory) {
  ::unsetenv("WEYLKIT_CACHE");
  auto r = run({"mult", "--type", "C", "--rank", "12", "--lambda", "w10"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.err.find("cache"), std::string::npos);
}
