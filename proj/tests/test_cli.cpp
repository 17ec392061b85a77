#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "trigsb");
  std::ostringstream out, err;
  int code = trigsb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(TRIGSB_DATA_DIR) + "/" + file; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, AxiomsOk) {
  auto r = run({"axioms", data("projection_trioid.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: 11 identity families, 88 instances checked\n");
  auto d = run({"axioms", data("projection_dimonoid.json")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "OK: 5 identity families, 40 instances checked\n");
}

TEST(Cli, AxiomsViolation) {
  auto r = run({"axioms", data("mutated_trioid.json")});
  EXPECT_EQ(r.code, 1);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "FAIL: 2 violations in 88 instances");
  EXPECT_EQ(ls[1], "VIOLATION (a-|b)|-c=(a|-b)|-c at (a,b,c)=(b,a,b): lhs=b rhs=a");
}

TEST(Cli, InputErrorsExitTwo) {
  auto missing = run({"axioms", "/nonexistent/x.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("/nonexistent/x.json"), std::string::npos);

  auto garbled = write_temp("trigsb_garbled.json", "{ \"name\": ");
  auto g = run({"axioms", garbled});
  EXPECT_EQ(g.code, 2);
  EXPECT_NE(g.err.find(garbled), std::string::npos);

  auto bad_field = write_temp("trigsb_bad_field.json",
                              R"({"name":"B","kind":"trioid","elements":["a"],"vdash":[[0]],"dashv":[[3]],"perp":[[0]]})");
  auto b = run({"axioms", bad_field});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("'dashv'[0][0]"), std::string::npos) << b.err;

  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"basis", data("singleton_trioid.json"), "--t", "4", "--max-len", "2"}).code, 2);
  EXPECT_EQ(run({"basis", data("singleton_trioid.json"), "--t", "3"}).code, 2);
  EXPECT_EQ(run({"axioms", data("projection_dimonoid.json"), "--t", "3"}).code, 2);
  EXPECT_EQ(run({"mul", data("projection_trioid.json"), "--t", "3", "--op", "vdash", "--lhs", "T1:b", "--rhs", "T1:.a"}).code, 2);
  EXPECT_EQ(run({"mul", data("projection_trioid.json"), "--t", "2", "--op", "perp", "--lhs", "T1:.a", "--rhs", "T1:.a"}).code, 2);
  EXPECT_EQ(run({"render-term", "X:x X:y", "--t", "3"}).code, 2);
}

TEST(Cli, Mul) {
  auto r = run({"mul", data("projection_trioid.json"), data("singleton_trioid.json"), "--t", "3", "--op", "dashv", "--lhs",
                "T1:a T2:.u", "--rhs", "T1:.a"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "# lhs: T1:a T2:.u");
  EXPECT_EQ(ls[1], "# rhs: T1:.a");
  EXPECT_EQ(ls[2], "# op: dashv");
  EXPECT_EQ(ls[3], "T1:a T2:.u T1:a");
}

TEST(Cli, MulTrialgebra) {
  auto r = run({"mul", data("scaled_projection_trialgebra.json"), data("dual_numbers_trialgebra.json"), "--t", "3", "--op",
                "vdash", "--lhs", "L:.c", "--rhs", "L:.c"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).back(), "1/2 L:.c");
}

TEST(Cli, RenderTerm) {
  auto r = run({"render-term", "T1:.y T1:x T1:y T1:.x T1:x", "--t", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(y -| x -| y) _|_ (x -| x)\n");
}

TEST(Cli, BasisCounts) {
  auto r = run({"basis", data("one_generator_trioid.json"), data("singleton_trioid.json"), "--t", "3", "--max-len", "4",
                "--count-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "length 1: 2\nlength 2: 6\nlength 3: 14\nlength 4: 30\ntotal: 52\n");
}

TEST(Cli, BasisWords) {
  auto r = run({"basis", data("one_generator_trioid.json"), data("singleton_trioid.json"), "--t", "2", "--max-len", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"T1:.a", "T2:.u", "T1:a T2:.u", "T2:u T1:.a", "T1:.a T2:u", "T2:.u T1:a"}));
}

TEST(Cli, Associated) {
  auto r = run({"associated", data("projection_trioid.json")});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "family: T1");
  EXPECT_EQ(ls[1], "reps: a");
  EXPECT_EQ(ls[2], "eliminate: b -> T1:a");
  EXPECT_EQ(ls.back(), "gsb: trivial");
}

TEST(Cli, CompleteWithTrace) {
  auto r = run({"complete", data("projection_trioid.json"), "--trace"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls[0].rfind("trace: ", 0), 0u);
  EXPECT_NE(std::find(ls.begin(), ls.end(), "status: completed"), ls.end());
  EXPECT_EQ(ls.back(), "irreducible letters: T1:a");
  auto tight = run({"complete", data("projection_trioid.json"), "--max-rules", "1"});
  EXPECT_EQ(tight.code, 1);
  EXPECT_EQ(run({"complete", data("projection_trioid.json"), "--max-steps", "0"}).code, 2);
}

TEST(Cli, OracleCheck) {
  auto r = run({"oracle-check", data("projection_trioid.json"), data("singleton_trioid.json"), "--t", "3", "--samples", "500",
                "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"oracle-check", data("scaled_projection_trialgebra.json"), data("singleton_trioid.json"),
                                "--t", "3", "--samples", "300", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> basis{"basis", data("projection_trioid.json"), data("singleton_trioid.json"), "--t", "3", "--max-len", "3"};
  EXPECT_EQ(run(basis).out, run(basis).out);
}

TEST(Cli, Selftest) {
  auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 11u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(ls[i].rfind("[PASS] ", 0), 0u) << ls[i];
}
