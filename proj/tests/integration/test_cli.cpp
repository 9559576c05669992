#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "theta_cli/cli.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = theta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(THETA_TEST_DATA) / name).string(); }

TEST(Cli, Convert) {
  EXPECT_EQ(run({"convert", "--from", "seq", "--to", "updown", "0 1 0"}).out, "updown: 1\n");
  EXPECT_EQ(run({"convert", "--from", "updown", "--to", "seq", "0"}).out, "dims: 0\n");
  EXPECT_EQ(run({"convert", "--from", "seq", "--to", "tree", "0 1 0 1 0"}).out, "(()())\n");
  EXPECT_EQ(run({"convert", "--from", "tree", "--to", "seq", "((()))"}).out, "dims: 0 1 2 1 0\n");
  const auto bad = run({"convert", "--from", "seq", "--to", "tree", "0 2 0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("StepNotOne"), std::string::npos);
}

TEST(Cli, Check) {
  const auto disk = run({"check", data("disk.dims")});
  EXPECT_EQ(disk.code, 0);
  EXPECT_NE(disk.out.find("simple: pass (dims: 0 1 2 1 0)"), std::string::npos);
  const auto cycle = run({"check", data("cycle.adc")});
  EXPECT_EQ(cycle.code, 2);
  EXPECT_NE(cycle.out.find("loop-free: fail"), std::string::npos);
  EXPECT_NE(cycle.out.find("unital: pass"), std::string::npos);
  const auto broken = run({"check", data("broken.adc")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.out.find("structure: fail"), std::string::npos);
  EXPECT_EQ(run({"check", data("missing.dims")}).code, 1);
}

TEST(Cli, Hom) {
  EXPECT_EQ(run({"hom", "0,1,0", "0,1,0,1,0"}).out, "6\n");
  EXPECT_EQ(run({"hom", "--count", data("arrow.dims"), data("disk.dims")}).out, "4\n");
  EXPECT_EQ(run({"--convention", "swapped", "hom", "0,1,0", "0,1,0,1,0"}).out, "6\n");
  EXPECT_EQ(run({"hom", data("cycle.adc"), "0"}).code, 1);
}

TEST(Cli, ListedMorphismsValidate) {
  const fs::path dir = fs::temp_directory_path() / "theta_cli_test";
  fs::create_directories(dir);
  fs::copy_file(data("arrow.dims"), dir / "arrow.dims", fs::copy_options::overwrite_existing);
  fs::copy_file(data("pair.dims"), dir / "pair.dims", fs::copy_options::overwrite_existing);
  const auto all = run({"hom", "--list", (dir / "arrow.dims").string(), (dir / "pair.dims").string()});
  ASSERT_EQ(all.code, 0);
  std::size_t count = 0, start = 0;
  while (start < all.out.size()) {
    std::size_t end = all.out.find("\n\n", start);
    if (end == std::string::npos) end = all.out.size();
    const fs::path file = dir / ("m" + std::to_string(count++) + ".morphism");
    std::ofstream(file) << all.out.substr(start, end - start) << '\n';
    const auto v = run({"validate-morphism", file.string()});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
    EXPECT_EQ(v.out, "valid\n");
    start = end + 2;
  }
  EXPECT_EQ(count, 6u);
  fs::remove_all(dir);
}

TEST(Cli, ValidateMorphism) {
  EXPECT_EQ(run({"validate-morphism", data("spread.morphism")}).out, "valid\n");
  const auto swap = run({"validate-morphism", data("swap.morphism")});
  EXPECT_EQ(swap.code, 2);
  EXPECT_EQ(swap.out.rfind("invalid: NotChainMap", 0), 0u) << swap.out;
  const auto shape = run({"validate-morphism", data("short.morphism")});
  EXPECT_EQ(shape.code, 1);
  EXPECT_NE(shape.err.find("ShapeMismatch"), std::string::npos);
}

TEST(Cli, CellsAndDual) {
  const auto cells = run({"cells", "0,1,2,1,0"});
  EXPECT_EQ(cells.code, 0);
  EXPECT_EQ(std::count(cells.out.begin(), cells.out.end(), '\n'), 5);
  EXPECT_EQ(run({"cells", "--cap", "9", "0"}).code, 1);
  const auto dual = run({"dual", "0,1,2,1,0"});
  EXPECT_EQ(dual.out.rfind("cochain\n0 deg=0 coboundary= -1*1 -1*3\n", 0), 0u) << dual.out;
  EXPECT_NE(dual.out.find("eta= 1*0 1*4"), std::string::npos);
}

TEST(Cli, Wreath) {
  const auto v = run({"wreath-v", data("suspended_arrow.wr")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, run({"wreath-v", data("suspended_arrow.wr")}).out);
  EXPECT_NE(v.out.find("2 deg=2 boundary= -1*1 1*3"), std::string::npos) << v.out;
  const auto ff = run({"wreath-check", data("suspended_arrow.wr"), data("pair_then_point.wr")});
  EXPECT_EQ(ff.code, 0) << ff.out << ff.err;
  EXPECT_NE(ff.out.find("fully faithful: pass"), std::string::npos);
}

TEST(Cli, SuiteAndDeterminism) {
  const auto first = run({"suite"});
  EXPECT_EQ(first.code, 0) << first.out;
  EXPECT_EQ(first.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"suite"}).out, first.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--convention", "sideways", "hom", "0", "0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
