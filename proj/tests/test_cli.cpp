#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "adlie/catalog.hpp"
#include "adlie/construct.hpp"
#include "adlie/liealg.hpp"
#include "adlie/rho.hpp"
#include "commands.hpp"
#include "document.hpp"
#include "support.hpp"

using namespace adlie;
using namespace adlie::cli;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("adlie_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_text(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string write(const std::string& name, const Json& j) const { return write_text(name, j.dump(2)); }

  /// verify on a written document must succeed.
  void expect_verifies(const std::string& file) const {
    const RunResult r = run_cli({"verify", "--algebra", file, "--json"});
    EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
    EXPECT_TRUE(Json::parse(r.out).at("ok").get<bool>()) << r.out;
  }

  fs::path dir_;
};

AlgebraDocument random_document(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind_pick(0, 2), dim_pick(0, 5), coin(0, 3);
  AlgebraDocument doc;
  const int kind = kind_pick(rng);
  doc.kind = kind == 0 ? "lie" : kind == 1 ? "metric_lie" : "rho";
  const std::size_t n = static_cast<std::size_t>(dim_pick(rng));
  if (coin(rng) == 0)
    for (std::size_t i = 0; i < n; ++i) doc.labels.push_back("e" + std::to_string(i + 1) + (coin(rng) == 0 ? "'" : ""));
  doc.algebra = LieAlgebra(n);
  if (doc.kind == "rho") {
    doc.gram = adlie::testing::random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) doc.mats.push_back(adlie::testing::random_matrix(rng, n, n));
    return doc;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) != 0) {
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k)
          if (coin(rng) == 0) v[k] = adlie::testing::random_scalar(rng);
        doc.algebra.set_bracket(i, j, v);
      }
  doc.algebra.set_labels(doc.labels);
  if (doc.kind == "metric_lie") doc.gram = adlie::testing::random_matrix(rng, n, n);
  return doc;
}

}  // namespace

TEST(Document, RandomRoundTrip) {
  std::mt19937 rng(73);
  for (int t = 0; t < 1000; ++t) {
    const AlgebraDocument doc = random_document(rng);
    const Json j = to_json(doc);
    EXPECT_EQ(parse_document(j), doc);
    EXPECT_EQ(parse_document(parse_json_text(j.dump())), doc);
  }
}

TEST(Document, ScalarsAreExactStrings) {
  EXPECT_EQ(to_json(Scalar(-1, 2)), Json("-1/2"));
  EXPECT_EQ(to_json(Scalar(4)), Json("4"));
  EXPECT_EQ(scalar_from(Json("6/4"), "/x"), Scalar(3, 2));
  EXPECT_EQ(scalar_from(Json(7), "/x"), Scalar(7));
  EXPECT_THROW(scalar_from(Json(0.5), "/x"), SchemaError);
  EXPECT_THROW(scalar_from(Json("1/0"), "/x"), SchemaError);
  EXPECT_THROW(scalar_from(Json("x"), "/x"), SchemaError);
}

TEST(Document, OneBasedSortedBrackets) {
  const Json j = lie_json(heisenberg(1));
  EXPECT_EQ(j.at("brackets"), Json::parse(R"([{"i": 1, "j": 2, "coeffs": {"3": "1"}}])"));
  EXPECT_EQ(lie_from(j), heisenberg(1));
}

TEST(Document, SchemaErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_document(parse_json_text(text));
    } catch (const SchemaError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"schema_version": "1", "kind": "lie", "dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "1"}}]})")
                .find("/brackets/0"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema_version": "1", "kind": "lie", "dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"4": "1"}}]})")
                .find("/brackets/0"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema_version": "1", "kind": "widget", "dim": 3})").find("/kind"), std::string::npos);
  EXPECT_NE(message(R"({"schema_version": "1", "kind": "metric_lie", "dim": 2, "brackets": [], "gram": [["1"]]})").find("/gram"),
            std::string::npos);
  EXPECT_NE(message("{\"schema_version\": \"1\",\n \"kind\": }").find("line 2"), std::string::npos);
}

TEST(Document, MatrixDocuments) {
  Mat m{{1, 0}, {0, 2}};
  m(0, 1) = Scalar(-1, 3);
  EXPECT_EQ(matrix_document_from(matrix_json(m)), m);
  EXPECT_EQ(matrix_document_from(Json::parse(R"([["1", "-1/3"], ["0", 2]])")), m);
}

TEST_F(CliTest, GenerateThenVerify) {
  const std::string rho = path("rho.json");
  EXPECT_EQ(run_cli({"generate", "--dim", "9", "--out", rho}).code, kSuccess);
  const RunResult v = run_cli({"verify", "--rho", rho});
  EXPECT_EQ(v.code, kSuccess);
  EXPECT_NE(v.out.find("OK"), std::string::npos);
  const RhoMap parsed = rho_from(read_json_file(rho));
  EXPECT_EQ(parsed.mats(), std::get<RhoMap>(generate(9)).mats());
}

TEST_F(CliTest, GenerateFourIsACertificate) {
  const RunResult r = run_cli({"generate", "--dim", "4", "--json"});
  EXPECT_EQ(r.code, kFailure);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("kind"), "nonexistence_certificate");
  EXPECT_EQ(j.at("n"), 4);
}

TEST_F(CliTest, DecideHeisenberg) {
  const std::string h3 = write("h3.json", lie_json(heisenberg(1)));
  const RunResult r = run_cli({"decide", "--algebra", h3, "--inner", "identity", "--json"});
  EXPECT_EQ(r.code, kFailure);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("admits"), false);
  EXPECT_EQ(j.at("failed"), "i");
}

TEST_F(CliTest, DecideModelWithMatrixInner) {
  const std::string n = write("n.json", lie_json(modified_cotangent(primitive(3, 1)).algebra));
  std::mt19937 rng(79);
  const std::string inner = write("inner.json", matrix_json(adlie::testing::random_positive_definite(rng, 6)));
  const std::string metric = path("metric.json");
  const RunResult r = run_cli({"decide", "--algebra", n, "--inner", inner, "--out", metric, "--json"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("admits"), true);
  expect_verifies(metric);
}

TEST_F(CliTest, OutputsAreReverifiable) {
  const std::string rho = path("rho.json");
  ASSERT_EQ(run_cli({"generate", "--dim", "5", "--out", rho}).code, kSuccess);
  const std::string mc = path("mc.json");
  ASSERT_EQ(run_cli({"modified-cotangent", "--rho", rho, "--out", mc}).code, kSuccess);
  expect_verifies(mc);

  const std::string h3 = write("h3.json", lie_json(heisenberg(1)));
  const std::string cot = path("cot.json");
  ASSERT_EQ(run_cli({"cotangent", "--algebra", h3, "--out", cot}).code, kSuccess);
  expect_verifies(cot);

  const std::string n3 = write("n3.json", metric_lie_json(modified_cotangent(primitive(3, 1))));
  const std::string der = write("der.json", matrix_json(cotangent_block_derivation(Mat(3, 3), Mat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})));
  const std::string ext = path("ext.json");
  ASSERT_EQ(run_cli({"double-extend", "--algebra", n3, "--derivation", der, "--out", ext}).code, kSuccess);
  expect_verifies(ext);

  const MetricLieAlgebra scrambled = transport(add_central_factor(modified_cotangent(primitive(3, 1)), 1, Mat{{1}}),
                                               Mat{{1, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 2},
                                                   {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                                   {0, 0, 0, 0, 0, 0, 1}});
  const std::string sc = write("sc.json", metric_lie_json(scrambled));
  const std::string model = path("model.json");
  const RunResult nf = run_cli({"normal-form", "--algebra", sc, "--out", model, "--json"});
  ASSERT_EQ(nf.code, kSuccess) << nf.err;
  EXPECT_EQ(read_json_file(model).at("corank"), 1);
  expect_verifies(model);
}

TEST_F(CliTest, GeometryRmatrixIsometry) {
  const std::string n3 = write("n3.json", metric_lie_json(modified_cotangent(primitive(3, 1))));
  const RunResult g = run_cli({"geom", "--algebra", n3, "--json"});
  EXPECT_EQ(g.code, kSuccess) << g.err;
  EXPECT_EQ(Json::parse(g.out).at("flat"), true);

  const std::string so = write("so3.json", metric_lie_json(so3_metric()));
  const std::string r = write("r.json", matrix_json(Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
  const RunResult rm = run_cli({"rmatrix", "--algebra", so, "--matrix", r, "--json"});
  EXPECT_EQ(rm.code, kSuccess) << rm.err;
  EXPECT_EQ(Json::parse(rm.out).at("classical"), true);

  const std::string n3b = write("n3b.json", metric_lie_json(modified_cotangent(primitive(3, 2))));
  const RunResult iso = run_cli({"isometry", "--algebra", n3, "--algebra2", n3b, "--json"});
  EXPECT_EQ(iso.code, kSuccess) << iso.err;
}

TEST_F(CliTest, UsageAndSchemaErrors) {
  EXPECT_EQ(run_cli({"generate", "--dim", "9", "--bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"verify", "--algebra", path("missing.json")}).code, kUsage);
  const std::string bad = write_text("bad.json", R"({"schema_version": "1", "kind": "lie", "dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {}}]})");
  const RunResult r = run_cli({"verify", "--algebra", bad});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("/brackets/0"), std::string::npos);
  const std::string syntax = write_text("syntax.json", "{\n  \"kind\": ,\n}");
  const RunResult s = run_cli({"verify", "--algebra", syntax});
  EXPECT_EQ(s.code, kUsage);
  EXPECT_NE(s.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, VerificationFailureExitsOne) {
  const std::string h3 = write("h3i.json", metric_lie_json(MetricLieAlgebra(heisenberg(1), BilinearSpace::identity(3))));
  const RunResult r = run_cli({"verify", "--algebra", h3, "--json"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(Json::parse(r.out).at("ok"), false);
}
