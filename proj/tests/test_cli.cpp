#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"
#include "hw/density_io.hpp"
#include "hw/states.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hybrid-wigner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kCoarse = {"--n-phi", "32", "--n-theta", "16", "--n-beta", "48"};

std::vector<std::string> with_coarse(std::vector<std::string> args) {
  args.insert(args.end(), kCoarse.begin(), kCoarse.end());
  return args;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, MaximallyMixedNvIsZero) {
  const Result r = run(with_coarse({"nv", "--state", "maximally-mixed-qubit"}));
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("nv").get<double>(), 0.0);
  EXPECT_TRUE(j.contains("v_critical"));
  EXPECT_TRUE(j.contains("error_estimate"));
  EXPECT_TRUE(j.contains("verdict"));
  EXPECT_TRUE(j.contains("config"));
}

TEST(Cli, WitnessCatIsEntangled) {
  const Result r = run({"witness", "--alpha", "1", "--classical-bosonic", "--n-phi", "64", "--n-theta", "32"});
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict").get<std::string>(), "Entangled");
  EXPECT_NEAR(j.at("v_critical").get<double>(), 0.0773502692, 1e-9);
}

TEST(Cli, WitnessNeedsBound) {
  EXPECT_EQ(run(with_coarse({"witness", "--alpha", "1"})).code, hw::cli::kValidationError);
  EXPECT_EQ(run(with_coarse({"witness", "--alpha", "1", "--classical-bosonic", "--bosonic-nv", "1:0"})).code,
            hw::cli::kValidationError);
  const Result r = run(with_coarse({"witness", "--alpha", "1", "--bosonic-nv", "0.5:0.1,0.5:0.3"}));
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("v_critical").get<double>(), 2.0 / std::sqrt(3.0) * 0.2 + 0.0773502692,
              1e-9);
}

TEST(Cli, VerifyLindblad) {
  const Result r = run({"verify-lindblad", "--alpha", "1", "--kappa-t", "0.3"});
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j.at("trace_distance").get<double>(), 1e-4);
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(Cli, EntNegativity) {
  const Result r = run({"ent-negativity", "--alpha", "1"});
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j.at("ent_negativity").get<double>(), 0.5 * std::sqrt(1.0 - std::exp(-4.0)), 1e-8);
  EXPECT_NEAR(j.at("ent_negativity_closed").get<double>(), 0.5 * std::sqrt(1.0 - std::exp(-4.0)), 1e-11);
}

TEST(Cli, WignerSliceCsv) {
  const Result r = run({"wigner-slice", "--alpha", "1", "--points", "5", "--theta", "0.7853981633974483"});
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# config: ", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, "phi,theta,re_beta,im_beta,w_numeric,w_closed");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    ASSERT_EQ(v.size(), 6u);
    EXPECT_NEAR(v[4], v[5], 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  const Result q = run({"wigner-slice", "--state", "pure-qubit", "--a", "0.3", "--points", "3"});
  ASSERT_EQ(q.code, hw::cli::kOk);
  EXPECT_NE(q.out.find("phi,theta,re_beta,im_beta,w_numeric\n"), std::string::npos);
}

TEST(Cli, FigureOutputFileByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = dir / "hw_cli_fig_a.csv", p2 = dir / "hw_cli_fig_b.csv";
  for (const auto& p : {p1, p2}) {
    const Result r = run(with_coarse({"figure", "4", "--points", "4", "--output", p.string()}));
    ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  const std::string a = slurp(p1);
  EXPECT_EQ(a, slurp(p2));
  EXPECT_EQ(a.rfind("# config: figure=4", 0), 0u);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, StateFromJsonFile) {
  const auto path = std::filesystem::temp_directory_path() / "hw_cli_state.json";
  hw::write_density_file(hw::tensor(hw::maximally_mixed_qubit(), hw::vacuum(hw::FockConfig(24))), path);
  const Result r = run(with_coarse({"nv", "--state", path.string()}));
  ASSERT_EQ(r.code, hw::cli::kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("nv").get<double>(), 0.0);
  std::filesystem::remove(path);
}

TEST(Cli, ValidationErrorsExitTwo) {
  EXPECT_EQ(run({}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"bogus"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--n-phi", "2"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--state", "pure-qubit", "--a", "1.5"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--state", "no-such-file.json"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--bloch", "1,1,1", "--state", "bloch-qubit"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--kappa-t", "-1"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"figure", "7"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"figure", "2", "--points", "1"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"nv", "--alpha", "x"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"verify-lindblad", "--alpha", "1", "--fock-cutoff", "6"}).code, hw::cli::kValidationError);
  EXPECT_EQ(run({"figure", "1", "--output", "/nonexistent-dir/x.csv", "--points", "2"}).code, hw::cli::kValidationError);
}

TEST(Cli, NumericalErrorExitsThree) {
  // A beta square too small to hold the state breaks the normalization check.
  EXPECT_EQ(run({"nv", "--alpha", "2", "--beta-radius", "0.5", "--n-phi", "16", "--n-theta", "8", "--n-beta", "16"}).code,
            hw::cli::kNumericalError);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, hw::cli::kOk); }
