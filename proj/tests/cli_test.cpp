#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qharm_cli.hpp"

using namespace qharm;
namespace fs = std::filesystem;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }
const ScalarQ one(1);
NCPoly Z(int n, int i) { return NCPoly::z(n, i); }
NCPoly W(int n, int i) { return NCPoly::w(n, i); }

struct CliResult {
  int code;
  std::string out, err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qharm");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qharm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const NCPoly& p) const { return write(name, poly_to_json(p).dump()); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& file) {
  std::ifstream f(file);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void expect_same(const NCPoly& a, const NCPoly& b) {
  EXPECT_TRUE((a - b).to_order(Order::ZFirst).is_zero()) << a.to_string() << "  vs  " << b.to_string();
}

}  // namespace

TEST(PolyJson, RoundTrip) {
  const std::vector<NCPoly> samples = {
      NCPoly(2),
      NCPoly::constant(3, q(-3) + ScalarQ(5)),
      (one + q(2)).inverse() * (Z(2, 2) * W(2, 2) - q(2) * (Z(2, 1) * W(2, 1))),
      (W(3, 2) * Z(3, 1) + q(1) * (Z(3, 3) * Z(3, 3))).to_order(Order::WFirst),
      zonal(3, 2, 1),
  };
  for (const auto& p : samples) {
    const NCPoly back = parse_poly_json(poly_to_json(p).dump());
    EXPECT_EQ(back.order(), p.order());
    expect_same(back, p);
    EXPECT_EQ(poly_to_json(back).dump(), poly_to_json(p).dump());
  }
}

TEST(PolyJson, MalformedInputReportsPosition) {
  try {
    parse_poly_json("{\"n\": 2,\n \"terms\": [");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(PolyJson, BadFieldsReportTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_poly_json(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"terms": []})").find("'n'"), std::string::npos);
  EXPECT_NE(message(R"({"n": 9, "terms": []})").find("polynomial.n"), std::string::npos);
  EXPECT_NE(message(R"({"n": 2, "terms": [{"z": [1], "w": [0, 0], "coeff": "1"}]})").find("exponents"), std::string::npos);
  EXPECT_NE(message(R"({"n": 2, "terms": [{"z": [1, 0], "w": [0, 0], "coeff": "1/("}]})").find("coeff"), std::string::npos);
}

TEST_F(CliTest, DimPrintsDimension) {
  const CliResult r = invoke({"dim", "--n", "2", "--m", "1", "--mprime", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(invoke({"dim", "--n", "3", "--m", "2", "--mprime", "1"}).out, "15\n");
}

TEST_F(CliTest, ZonalExample) {
  const CliResult r = invoke({"zonal", "--n", "2", "--m", "1", "--mprime", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_same(parse_poly_json(r.out), (one + q(2)).inverse() * (Z(2, 2) * W(2, 2) - q(2) * (Z(2, 1) * W(2, 1))));
}

TEST_F(CliTest, LaplaceProjectRestrictWriteFiles) {
  const std::string in = write("p.json", Z(2, 1) * W(2, 1));
  ASSERT_EQ(invoke({"laplace", "--in", in, "--out", path("lap.json")}).code, 0);
  ASSERT_EQ(invoke({"project", "--in", in, "--out", path("proj.json")}).code, 0);
  ASSERT_EQ(invoke({"restrict", "--in", in, "--out", path("res.json")}).code, 0);
  expect_same(parse_poly_json(slurp(path("lap.json"))), ops::laplace(2).apply(Z(2, 1) * W(2, 1)));
  expect_same(parse_poly_json(slurp(path("proj.json"))), project(Z(2, 1) * W(2, 1)));
  expect_same(parse_poly_json(slurp(path("res.json"))), restrict_to_sphere(Z(2, 1) * W(2, 1)));
}

TEST_F(CliTest, InnerProduct) {
  const std::string a = write("a.json", Z(2, 1));
  EXPECT_EQ(invoke({"inner", "--in", a, "--in2", a}).out, (one + q(2)).inverse().to_string() + "\n");
  EXPECT_EQ(invoke({"inner", "--in", a, "--in2", a, "--q0", "1/2"}).out, "4/5\n");
  EXPECT_EQ(invoke({"inner", "--in", write("b.json", Z(3, 1)), "--in2", a}).code, cli::kInputError);
}

TEST_F(CliTest, GramExactAndNumeric) {
  const CliResult r = invoke({"gram", "--n", "2", "--m", "1", "--mprime", "1", "--q0", "7/10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["basis"].size(), 3u);
  EXPECT_EQ(j["gram"].size(), 3u);
  EXPECT_EQ(j["q"], "7/10");
  EXPECT_EQ(j["gram_num"][0][1], "0");
}

TEST_F(CliTest, BasisOrthonormalNeedsPoint) {
  EXPECT_EQ(invoke({"basis", "--n", "2", "--m", "1", "--mprime", "0", "--orthonormal"}).code, cli::kInputError);
  const CliResult r = invoke({"basis", "--n", "2", "--m", "1", "--mprime", "0", "--orthonormal", "--q0", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& e : j) EXPECT_TRUE(e.contains("normalizer"));
}

TEST_F(CliTest, SplitProjectExample) {
  const CliResult r = invoke({"split-project", "--n", "2", "--p", "1", "--m", "1", "--mprime", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["u"], 1);
  expect_same(poly_from_json(j["projection"]), project(Z(2, 1) * W(2, 1)));
  EXPECT_EQ(invoke({"split-project", "--n", "2", "--p", "1", "--m", "1", "--mprime", "1", "--t-element", "4"}).code,
            cli::kInputError);
  EXPECT_EQ(invoke({"split-project", "--n", "2", "--p", "1", "--m", "2", "--mprime", "1"}).code, cli::kInputError);
}

TEST_F(CliTest, VerifyExitCodes) {
  const CliResult ok = invoke({"verify", "--suite", "laplace", "--n", "3", "--max-degree", "4", "--report", path("r.json")});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  EXPECT_TRUE(fs::exists(path("r.json")));

  const CliResult bad = invoke({"verify", "--suite", "splitx", "--n", "2", "--max-degree", "2", "--report", path("s.json")});
  EXPECT_EQ(bad.code, cli::kVerificationFailed);
  EXPECT_NE(bad.err.find(path("s.json")), std::string::npos);

  EXPECT_EQ(invoke({"verify", "--suite", "nope", "--n", "2", "--max-degree", "2"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"verify", "--suite", "laplace", "--n", "9", "--max-degree", "9"}).code, cli::kInputError);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(invoke({}).code, cli::kInputError);
  EXPECT_EQ(invoke({"dim", "--n", "2"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"laplace", "--in", path("missing.json")}).code, cli::kInputError);
  const CliResult r = invoke({"laplace", "--in", write("bad.json", "{\"n\": 2,\n  \"terms\": [")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"project", "--in", write("mixed.json", Z(2, 1) + Z(2, 1) * W(2, 1))}).code, cli::kInputError);
  EXPECT_EQ(invoke({"eval", "--scalar", "q", "--q0", "3/2"}).code, cli::kInputError);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, cli::kOk); }

TEST_F(CliTest, EvalScalars) {
  EXPECT_EQ(invoke({"eval", "--scalar", "1/(1+q)", "--q0", "1/2"}).out, "2/3\n");
  EXPECT_EQ(invoke({"eval", "--scalar", "v", "--q0", "1/4"}).out, "1/2\n");
  EXPECT_EQ(invoke({"eval", "--scalar", "v", "--q0", "1/2"}).code, cli::kInputError);
  const CliResult d = invoke({"eval", "--scalar", "v", "--q0", "1/2", "--decimal", "--digits", "6"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "7.071068e-01\n");
}

// eval(project(p)) = project-at-q0(eval(p)), exact rationals
TEST_F(CliTest, EvalCommutesWithProjection) {
  for (const char* q0 : {"7/10", "1/3"})
    for (int n : {2, 3})
      for (int m = 1; m <= 2; ++m)
        for (int mp = 1; mp <= 2; ++mp) {
          const auto basis = monomial_basis(n, m, mp);
          for (std::size_t i = 0; i < basis.size(); i += 3) {
            const NCPoly p = NCPoly::monomial(n, basis[i]) + q(2) * NCPoly::monomial(n, basis[basis.size() - 1 - i]);
            const std::string in = write("p.json", p);
            ASSERT_EQ(invoke({"project", "--in", in, "--out", path("proj.json")}).code, 0);
            const CliResult projected_then_eval = invoke({"eval", "--in", path("proj.json"), "--q0", q0});
            const CliResult eval_early = invoke({"project", "--in", in, "--q0", q0});
            ASSERT_EQ(projected_then_eval.code, 0) << projected_then_eval.err;
            ASSERT_EQ(eval_early.code, 0) << eval_early.err;
            expect_same(poly_from_json(json::parse(projected_then_eval.out)), poly_from_json(json::parse(eval_early.out)));
          }
        }
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"basis", "--n", "3", "--m", "1", "--mprime", "1"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> v = {"verify", "--suite", "sphere", "--n", "2", "--max-degree", "2"};
  EXPECT_EQ(invoke(v).out, invoke(v).out);
}
