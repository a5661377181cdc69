#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "hyperlat/canonical.hpp"
#include "io.hpp"

namespace hyperlat {
namespace {

using io::json;
namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

RunResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperlat");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hyperlat_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kTriangle = R"({"vertices": [{"d": -2}, {"d": -2}, {"d": -3}], "edges": [[0,1,1],[1,2,1],[0,2,1]]})";

const char* kCaseOneModel = R"({
  "gram": [[1,0,0,0,0,0,0,0,0],[0,-1,0,0,0,0,0,0,0],[0,0,-1,0,0,0,0,0,0],[0,0,0,-1,0,0,0,0,0],
           [0,0,0,0,-1,0,0,0,0],[0,0,0,0,0,-1,0,0,0],[0,0,0,0,0,0,-1,0,0],[0,0,0,0,0,0,0,-1,0],
           [0,0,0,0,0,0,0,0,-1]],
  "K": [3,-1,-1,-1,-1,-1,-1,-1,-1],
  "E": [0,0,0,0,0,0,0,0,1],
  "curves": [{"class": [1,-1,-1,0,0,0,0,0,-1], "pa": 0}]})";

TEST_F(CliTest, CanonicalizeExample) {
  const auto in = write("k.json", R"({"mode": "diagonal", "n": 1, "vectors": {"kappa": [-3, 1]}})");
  const auto r = run({"canonicalize", "--input", in, "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["target"], json::parse("[3,-1]"));
  EXPECT_EQ(d["word"], json::parse(R"(["negate"])"));
  EXPECT_EQ(d["steps"], 0);
  EXPECT_TRUE(d["reached_canonical"].get<bool>());
}

TEST_F(CliTest, Verify240) {
  const auto r = run({"verify-240"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["count"], 240);
  EXPECT_EQ(d["by_shape"], json::parse("[8,28,56,56,56,28,8]"));
}

TEST_F(CliTest, ClassifyTriangle) {
  const auto r = run({"classify-singularity", "--input", write("g.json", kTriangle), "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["type"], "minimally_elliptic");
  EXPECT_EQ(d["kind"], "cusp");
  EXPECT_EQ(d["pa_Z0"], 1);
  EXPECT_EQ(d["Z0"], json::parse("[1,1,1]"));
}

TEST_F(CliTest, ClassifyRational) {
  const auto r = run({"classify-singularity", "--input",
                      write("a2.json", R"({"vertices": [{"d": -2}, {"d": -2}], "edges": [[0,1,1]]})")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["type"], "rational");
  EXPECT_EQ(d["multiplicity"], 2);
  EXPECT_EQ(d["peel"].size(), 2u);
}

TEST_F(CliTest, FundamentalCycle) {
  const auto in = write("g.json", kTriangle);
  const auto r = run({"fundamental-cycle", "--input", in, "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["Z0"], json::parse("[1,1,1]"));
  const auto s = run({"fundamental-cycle", "--input", in, "--seed", "5"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.doc()["Z0"], json::parse("[1,1,1]"));
}

TEST_F(CliTest, WallChain) {
  const auto in = write("c.json", R"({"mode": "diagonal", "n": 1, "vectors": {"x": [1,0], "y": [2,1]},
                                     "wall_type": {"w": [1,1], "p": -8}})");
  const auto r = run({"wall-chain", "--input", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_FALSE(d["same_chamber"].get<bool>());
  ASSERT_EQ(d["chain"].size(), 1u);
}

TEST_F(CliTest, NefSearch) {
  const auto r = run({"nef-search", "--input", write("m.json", kCaseOneModel)});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["case"], 1);
  EXPECT_EQ(d["M"]["den"], 1);
  EXPECT_EQ(d["M"]["num"], json::parse("[3,-1,-1,-1,-1,-1,-1,-1,0]"));
  EXPECT_TRUE(d["ample"].get<bool>());
}

TEST_F(CliTest, CertifyN9) {
  const auto r = run({"certify-n9", "--seed", "3", "--max-height", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto one = run({"certify-n9", "--input",
                        write("k9.json", R"({"mode": "diagonal", "n": 9, "vectors": {"kappa": [3,-1,-1,-1,-1,-1,-1,-1,-1,-1]}})")});
  ASSERT_EQ(one.code, 0) << one.err;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"canonicalize"}).code, 1);  // missing --input
  const auto garbled = run({"canonicalize", "--input", write("bad.json", "{not json")});
  EXPECT_EQ(garbled.code, 1);
  EXPECT_EQ(garbled.error()["error"]["code"], "malformed-input");

  const auto even = run({"canonicalize", "--input",
                         write("even.json", R"({"mode": "diagonal", "n": 1, "vectors": {"kappa": [4, 2]}})")});
  EXPECT_EQ(even.code, 2);
  EXPECT_EQ(even.error()["error"]["code"], "not-characteristic");

  const auto indefinite = run({"classify-singularity", "--input",
                               write("i.json", R"({"vertices": [{"d": -1}, {"d": -1}], "edges": [[0,1,1]]})")});
  EXPECT_EQ(indefinite.code, 2);
  EXPECT_EQ(indefinite.error()["error"]["code"], "not-negative-definite");
}

TEST_F(CliTest, OutputFile) {
  const fs::path target = dir_ / "out.json";
  const auto r = run({"verify-240", "--output", target.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(target);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(json::parse(ss.str())["count"], 240);
}

// Identical inputs give byte-identical output.
TEST_F(CliTest, Deterministic) {
  const auto m = write("m.json", kCaseOneModel);
  EXPECT_EQ(run({"nef-search", "--input", m}).out, run({"nef-search", "--input", m}).out);
  const auto k = write("k.json", R"({"mode": "diagonal", "n": 5, "vectors": {"kappa": [5,-3,-3,-1,-1,-1]}})");
  EXPECT_EQ(run({"canonicalize", "--input", k}).out, run({"canonicalize", "--input", k}).out);
  EXPECT_EQ(run({"certify-n9", "--seed", "11"}).out, run({"certify-n9", "--seed", "11"}).out);
  EXPECT_EQ(run({"walls"}).out, run({"walls"}).out);
}

// Every encoded vector, cycle and isometry re-parses to an equal value.
TEST_F(CliTest, OutputRoundTrip) {
  const auto k = write("k.json", R"({"mode": "diagonal", "n": 5, "vectors": {"kappa": [5,-3,-3,-1,-1,-1]}})");
  const json d = run({"canonicalize", "--input", k}).doc();
  const LatticeVector target = io::vector_from_json(d["target"]);
  EXPECT_EQ(target, kappa(5));
  const Isometry phi = io::isometry_from_json(json{{"matrix", d["matrix"]}, {"word", d["word"]}}, Lattice::diagonal(5));
  EXPECT_EQ(phi.apply({5, -3, -3, -1, -1, -1}), target);
  EXPECT_EQ(io::to_json(phi), (json{{"matrix", d["matrix"]}, {"word", d["word"]}}));

  const json g = run({"fundamental-cycle", "--input", write("g.json", kTriangle)}).doc();
  EXPECT_EQ(io::to_json(io::cycle_from_json(g["Z0"])), g["Z0"]);

  const json n = run({"nef-search", "--input", write("m.json", kCaseOneModel)}).doc();
  EXPECT_EQ(io::to_json(io::qdivisor_from_json(n["M"])), n["M"]);
  EXPECT_EQ(io::to_json(io::rational_from_json(n["M_squared"])), n["M_squared"]);
}

TEST(Io, RoundTrips) {
  const LatticeVector v{3, -1, 0, 7};
  EXPECT_EQ(io::vector_from_json(io::to_json(v)), v);
  const Rational q(-7, 4);
  EXPECT_EQ(io::rational_from_json(io::to_json(q)), q);
  const Rational big = Rational(BigInt(1) << 80, 3);
  EXPECT_EQ(io::rational_from_json(io::to_json(big)), big);
  const QDivisor m({2, 1, 1}, 3);
  EXPECT_EQ(io::qdivisor_from_json(io::to_json(m)), m);
  const DualGraph g = io::graph_from_json(json::parse(kTriangle));
  const DualGraph h = io::graph_from_json(io::to_json(g));
  EXPECT_EQ(h.matrix(), g.matrix());
  EXPECT_EQ(h.vertices(), g.vertices());
  const SurfaceModel s = io::model_from_json(json::parse(kCaseOneModel));
  const SurfaceModel t = io::model_from_json(io::to_json(s));
  EXPECT_EQ(t.canonical(), s.canonical());
  EXPECT_EQ(t.exceptional(), s.exceptional());
  EXPECT_EQ(t.lattice().gram_matrix(), s.lattice().gram_matrix());
  const auto w = WallType::make({1, 1}, -8);
  EXPECT_EQ(io::to_json(io::wall_type_from_json(io::to_json(w))), io::to_json(w));
}

TEST(Io, SortedKeysNoFloats) {
  const std::string text = io::dump(json{{"b", 1}, {"a", io::to_json(Rational(1, 2))}});
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
  EXPECT_EQ(text.find('.'), std::string::npos);
  EXPECT_THROW(io::vector_from_json(json::parse("[1.5, 2]")), InputError);
}

}  // namespace
}  // namespace hyperlat
