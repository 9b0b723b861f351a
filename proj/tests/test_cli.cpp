#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "ckc/cli.hpp"
#include "ckc/errors.hpp"
#include "ckc/io.hpp"
#include "ckc/verify.hpp"
#include "helpers.hpp"

namespace ckc {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ckc");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ckc-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string put(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, SolveTriangleLeaf) {
  const auto inst = put("tri.json", serialize_instance(testing::triangle_leaf()));
  const Result r = run_cli({"solve", "--instance", inst});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["radius"], "0/1");
  EXPECT_EQ(doc["centers"].size(), 2u);
  EXPECT_TRUE(doc.contains("trace"));
}

TEST_F(Cli, VerifyClosesTheLoop) {
  const auto inst = put("fx.json", serialize_instance(fixture_appendix_b(100).instance));
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"solve", "--instance", inst, "--no-enumerate"},
           {"solve-fair", "--instance", inst, "--samples", "4", "--seed", "9"},
           {"brute", "--instance", inst},
           {"brute", "--fair", "--instance", inst}}) {
    auto args = cmd;
    args.insert(args.end(), {"--out", path("sol.json")});
    ASSERT_EQ(run_cli(args).code, 0) << cmd[0];
    const Result v = run_cli({"verify", "--instance", inst, "--solution", path("sol.json")});
    EXPECT_EQ(v.code, 0) << cmd[0] << ": " << v.out;
    EXPECT_EQ(v.out, "ok\n");
  }
}

TEST_F(Cli, VerifyReportsViolations) {
  const Instance base = testing::on_line({0, 1}, 1, {{{0, 1}, 0}});
  const std::vector<Rational> p = {ratio(1, 2), ratio(1, 2)};
  const auto inst = put("two.json", serialize_instance(base, &p));
  const auto sol = put("bad.json",
                       R"({"radius": "0/1", "distribution": [{"centers": [0], "prob": "9/10"}]})");
  const Result v = run_cli({"verify", "--instance", inst, "--solution", sol});
  EXPECT_EQ(v.code, cli::kInvariant);
  EXPECT_NE(v.out.find("probabilities do not sum to 1"), std::string::npos);
  EXPECT_NE(v.out.find("point 1 "), std::string::npos);

  const auto tri = put("tri.json", serialize_instance(testing::triangle_leaf()));
  const auto wrong = put("wrong.json", R"({"radius": "0", "centers": [1, 3]})");
  const Result w = run_cli({"verify", "--instance", tri, "--solution", wrong});
  EXPECT_EQ(w.code, cli::kInvariant);
  EXPECT_NE(w.out.find("color 2"), std::string::npos);

  const auto claim = put("inf.json", R"({"status": "infeasible"})");
  EXPECT_EQ(run_cli({"verify", "--instance", tri, "--solution", claim}).code, cli::kInvariant);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", "--instance", path("missing.json")}).code, cli::kUsage);
  const auto bad = put("bad.json", R"({"n": 2, "k": 1, "dist": [["0", "1"], ["2", "0"]],
                                       "colors": [{"members": [0], "demand": 1}]})");
  const Result r = run_cli({"solve", "--instance", bad});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("d(0,1) != d(1,0)"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(Cli, GeneratorsEmitInstances) {
  const auto graph = put("g.txt", "# triangle with a leaf\n4\n0 1\n1 2\n0 2\n0 3\n");
  Result r = run_cli({"gen", "vc3", "--graph", graph, "--t", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, serialize_instance(testing::triangle_leaf()));

  const auto sc = put("sc.json", R"({"universe": 2, "sets": [[0], [1], [0, 1]]})");
  r = run_cli({"gen", "setcover", "--instance", sc, "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_instance(r.out).instance.num_colors(), 2);

  r = run_cli({"gen", "random", "--seed", "5", "--n", "7", "--fair", "--metric", "grid"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(parse_instance(r.out).p.has_value());
  EXPECT_EQ(run_cli({"gen", "random", "--seed", "5", "--n", "7", "--fair", "--metric", "grid"}).out,
            r.out);

  r = run_cli({"fixture", "appendix-b", "--M", "100", "--metadata", path("meta.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_instance(r.out).instance.size(), 12);
  EXPECT_EQ(Json::parse(read_file(path("meta.json")))["c1"], Json::parse("[0, 6]"));
}

TEST_F(Cli, BenchSmallSuite) {
  const Result r = run_cli({"bench", "--seeds", "1..4", "--n", "8", "--k", "2", "--gamma", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all rows within bound"), std::string::npos);
  const Result capped = run_cli({"bench", "--seeds", "1", "--n", "8", "--k", "2", "--cap", "3", "--json"});
  EXPECT_EQ(capped.code, 0);
  EXPECT_EQ(Json::parse(capped.out)["rows"][0]["ratio"], "n/a");
}

TEST_F(Cli, SolveIsByteDeterministic) {
  const auto inst = put("r.json", run_cli({"gen", "random", "--seed", "3", "--n", "9", "--k", "3", "--fair"}).out);
  const Result fair = run_cli({"solve-fair", "--instance", inst, "--samples", "5"});
  EXPECT_EQ(fair.code, 0);
  EXPECT_EQ(fair.out, run_cli({"solve-fair", "--instance", inst, "--samples", "5"}).out);
  const Result a = run_cli({"solve", "--instance", inst});
  EXPECT_EQ(a.out, run_cli({"solve", "--instance", inst}).out);
}

TEST_F(Cli, JsonLogsAndPartitionDump) {
  const auto inst = put("fx.json", serialize_instance(fixture_appendix_b(100).instance));
  const Result r = run_cli({"--json-logs", "solve", "--instance", inst, "--no-enumerate",
                            "--dump-partitions", "--trace", path("trace.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("\"event\":\"partition\""), std::string::npos);
  EXPECT_NE(r.err.find("\"event\":\"radius\""), std::string::npos);
  EXPECT_TRUE(Json::parse(read_file(path("trace.json"))).contains("radii"));
}

TEST_F(Cli, InstanceRoundTrip) {
  const FairInstance f = gen_random_fair(RandomSpec{8, 9, 3, 2, MetricKind::kGridL1});
  const std::string text = serialize_instance(f.base(), &f.p());
  const LoadedInstance back = parse_instance(text);
  EXPECT_EQ(serialize_instance(back.instance, &*back.p), text);
  const LoadedInstance shorthand = parse_instance(
      R"({"n": 2, "k": 1, "dist": [[0, "3/2"], ["3/2", 0]], "p": ["1", 0], "colors": [{"members": [1], "demand": 1}]})");
  EXPECT_EQ(shorthand.instance.distance(0, 1), ratio(3, 2));
  EXPECT_EQ((*shorthand.p)[0], 1);
  EXPECT_THROW(parse_instance("{"), InvalidInput);
}

TEST_F(Cli, ToolBinaryExitCodes) {
  const auto inst = put("tri.json", serialize_instance(testing::triangle_leaf()));
  const std::string tool = CKC_TOOL_PATH;
  EXPECT_EQ(std::system((tool + " solve --instance " + inst + " > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((tool + " solve > /dev/null 2>&1").c_str()), 0);
}

}  // namespace
}  // namespace ckc
