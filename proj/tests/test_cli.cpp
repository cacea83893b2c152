#include "ratgf/cli.hpp"
#include "ratgf/errors.hpp"
#include "ratgf/io.hpp"
#include "ratgf/rational.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ratgf;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ratgf_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ratgf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kInterval = "# [0, 4]\n1 2\n1 4\n-1 0\n";
const char* kTriangle = "2 3\n-1 0 0\n0 -1 0\n1 1 2\n";

}  // namespace

TEST_F(CliTest, Count) {
  EXPECT_EQ(run({"count", file("big", "1 2\n1 1000000000000\n-1 0\n")}).out, "1000000000001\n");
  EXPECT_EQ(run({"count", file("tri", kTriangle), "--oracle"}).out, "6\n");
  EXPECT_EQ(run({"count", file("none", "1 2\n1 -1\n-1 0\n")}).out, "0\n");
  EXPECT_EQ(run({"count", file("tri", kTriangle), "--json"}).out, "{\"count\":\"6\"}\n");
}

TEST_F(CliTest, Sum) {
  auto iv = file("iv", kInterval);
  EXPECT_EQ(run({"sum", iv, file("x2", "1 2\n")}).out, "30\n");
  EXPECT_EQ(run({"sum", iv, file("x4", "1 4\n"), "--oracle"}).out, "354\n");
  EXPECT_EQ(run({"sum", file("tri", kTriangle), file("one", "1 0 0\n")}).out, "6\n");
  EXPECT_EQ(run({"sum", iv, file("half", "1/2 1\n")}).out, "5\n");
  EXPECT_EQ(run({"sum", iv, file("third", "1/3 1\n"), "--json"}).out, "{\"sum\":\"10/3\"}\n");
}

TEST_F(CliTest, Maximize) {
  auto iv = file("iv", kInterval);
  auto x2 = file("x2", "1 2\n");
  auto r = run({"maximize", iv, x2, "--epsilon", "1/2", "--point", "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k=5\ncount=5\nlower=12\nupper=16\npoint=4\nvalue=16\n");
  auto j = run({"maximize", iv, x2, "--epsilon", "1/2", "--point", "--json"});
  EXPECT_EQ(j.out, "{\"k\":\"5\",\"count\":\"5\",\"lower\":\"12\",\"upper\":\"16\",\"point\":[\"4\"],\"value\":\"16\"}\n");
  auto single = run({"maximize", file("pt", "1 2\n1 3\n-1 -3\n"), x2, "--epsilon", "1/3", "--point"});
  EXPECT_EQ(single.out, "k=1\ncount=1\nlower=9\nupper=9\npoint=3\nvalue=9\n");
  auto fixed = run({"maximize", iv, x2, "--epsilon", "1/2", "--k", "2"});
  EXPECT_EQ(fixed.out, "k=2\ncount=5\nlower=9\nupper=18\n");
}

TEST_F(CliTest, JsonAndTextAgree) {
  auto tri = file("tri", kTriangle);
  auto f = file("f", "3 1 0\n1 0 1\n2 0 0\n");
  auto text = run({"maximize", tri, f, "--epsilon", "1/4", "--point"});
  auto json = run({"maximize", tri, f, "--epsilon", "1/4", "--point", "--json"});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(json.code, 0);
  auto parsed = nlohmann::json::parse(json.out);
  std::map<std::string, std::string> kv;
  std::istringstream in(text.out);
  std::string line;
  while (std::getline(in, line)) kv[line.substr(0, line.find('='))] = line.substr(line.find('=') + 1);
  for (const char* key : {"k", "count", "lower", "upper", "value"}) {
    EXPECT_EQ(parse_rational(parsed[key].get<std::string>()), parse_rational(kv[key])) << key;
  }
  std::string joined;
  for (const auto& x : parsed["point"]) joined += (joined.empty() ? "" : ",") + x.get<std::string>();
  EXPECT_EQ(joined, kv["point"]);
}

TEST_F(CliTest, ExitCodes) {
  auto iv = file("iv", kInterval);
  auto x2 = file("x2", "1 2\n");
  auto expect_failure = [&](const Result& r, int code) {
    EXPECT_EQ(r.code, code);
    EXPECT_TRUE(r.out.empty());
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
  };
  expect_failure(run({"count", file("bad", "1 2\n1 x\n-1 0\n")}), kExitUsage);
  expect_failure(run({"count", file("short", "1 3\n1 4\n-1 0\n")}), kExitUsage);
  expect_failure(run({"count", (dir_ / "missing").string()}), kExitUsage);
  expect_failure(run({"frobnicate"}), kExitUsage);
  expect_failure(run({"maximize", iv, x2}), kExitUsage);
  expect_failure(run({"maximize", iv, x2, "--epsilon", "0"}), kExitUsage);
  expect_failure(run({"maximize", iv, x2, "--epsilon", "-1/2"}), kExitUsage);
  expect_failure(run({"count", file("ray", "1 1\n-1 0\n")}), kExitUnbounded);
  // Negative objective values break the sandwich; the oracle notices.
  expect_failure(run({"maximize", iv, file("shift", "1 1\n-2 0\n"), "--epsilon", "1", "--k", "1", "--oracle"}),
                 kExitOracleMismatch);
  expect_failure(run({"sum", iv, file("x70", "1 70\n")}), kExitDegreeBudget);
  expect_failure(run({"maximize", iv, x2, "--epsilon", "1/2", "--degree-cap", "8"}), kExitDegreeBudget);
  expect_failure(run({"maximize", file("none", "1 2\n1 -1\n-1 0\n"), x2, "--epsilon", "1/2"}), kExitEmpty);
  expect_failure(run({"count", file("wide", "1 2\n1 100000\n-1 0\n"), "--oracle", "--oracle-cap", "10"}),
                 kExitUsage);
}

TEST_F(CliTest, ThreadsDoNotChangeOutput) {
  auto p = file("p", "3 5\n-1 0 0 0\n0 -1 0 0\n0 0 -1 0\n3 4 5 37\n1 -1 2 11/2\n");
  auto f = file("f", "1 1 0 0\n2 0 1 0\n3 0 0 1\n");
  auto h = file("h", "1 2 1 0\n-1/2 0 0 3\n");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", p}, {"sum", p, h}, {"maximize", p, f, "--epsilon", "1/2", "--point", "--json", "--degree-cap", "5000"}}) {
    auto one = run(args);
    auto more = args;
    more.push_back("--threads");
    more.push_back("3");
    auto three = run(more);
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, three.out);
    EXPECT_EQ(one.out, run(args).out);
  }
}

TEST(Io, ParsePolytopeAndPolynomial) {
  std::istringstream in("# header comment\n2 3\n\n-1 0 0\n0 -1 0\n  # inner comment\n1 1 2\n");
  Polytope p = parse_polytope(in);
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.rows().size(), 3u);
  EXPECT_EQ(p.rows()[2].b, 2);
  std::istringstream f("3/2 1 0\n-1 0 2\n3/2 1 0\n");
  auto poly = parse_polynomial(f, 2, 64);
  EXPECT_EQ(poly.terms().size(), 2u);
  EXPECT_EQ(poly.terms().at({1, 0}), 3);
  std::istringstream bad("1 2 3\n");
  EXPECT_THROW(parse_polynomial(bad, 1, 64), ParseError);
  std::istringstream neg("1 -1\n");
  EXPECT_THROW(parse_polynomial(neg, 1, 64), ParseError);
  std::istringstream big("1 40 30\n");
  EXPECT_THROW(parse_polynomial(big, 2, 64), DegreeBudgetExceeded);
  std::istringstream zero_row("1 1\n0 5\n");
  EXPECT_THROW(parse_polytope(zero_row), ParseError);
  std::istringstream zero_dim("0 0\n");
  EXPECT_THROW(parse_polytope(zero_dim), ParseError);
}
