#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "argbound_cli/cli.hpp"
#include "support.hpp"

using namespace argbound;
using namespace argbound::cli;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zeta_argbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("constants table") {
  const Captured c = invoke({"constants", "--max-m", "3"});
  CHECK(c.code == kExitOk);
  const auto rows = lines(c.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "m,parity,a_sum,j2_term,j3_term,k_total,C_m");
  CHECK(rows[1].rfind("1,", 0) == 0);
  CHECK(rows[1].find("0.509") != std::string::npos);
  CHECK(rows[2].find(",0.125") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == kExitConfig);
  CHECK(invoke({"bogus"}).code == kExitConfig);
  CHECK(invoke({"eval"}).code == kExitConfig);
  CHECK(invoke({"eval", "--t", "abc"}).code == kExitConfig);
  CHECK(invoke({"eval", "--t", "30", "--x-policy", "fixed"}).code == kExitConfig);
  CHECK(invoke({"eval", "--t", "30", "--x-policy", "fixed", "--x-value", "2000"}).code == kExitConfig);
  CHECK(invoke({"eval", "--t", "30", "--zeros", "/nonexistent/zeros.txt"}).code == kExitConfig);
  CHECK(invoke({"eval", "--t", "30", "--abs-tol", "-1"}).code == kExitConfig);
  CHECK(invoke({"sweep", "--t-start", "10", "--t-stop", "5", "--t-step", "1"}).code == kExitConfig);
  CHECK(invoke({"sweep", "--t-start", "10", "--t-stop", "9000", "--t-step", "100"}).code == kExitConfig);
  CHECK(invoke({"envelope", "--t", "10"}).code == kExitConfig);
  CHECK(invoke({"envelope", "--m", "2", "--t", "1000"}).code == kExitOk);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("eval emits JSON and flags ordinates") {
  const Captured c = invoke({"eval", "--t", "30", "--m", "2", "--zeros", ARGBOUND_ZEROS100});
  REQUIRE(c.code == kExitOk);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["m"] == 2);
  CHECK_FALSE(j["at_ordinate"].get<bool>());
  CHECK(std::abs(j["s0"].get<double>() - j["s_counting"].get<double>()) < 2e-4);
  CHECK(j["discrepancy"].get<double>() < 1e-3);
  CHECK(j["x_clamped"].get<bool>());
  CHECK(c.err.find("clamped") != std::string::npos);

  const std::string g1 = format_number(testing_support::zeros100()[0]);
  const Captured at = invoke({"eval", "--t", g1, "--zeros", ARGBOUND_ZEROS100});
  REQUIRE(at.code == kExitOk);
  CHECK(nlohmann::json::parse(at.out)["at_ordinate"].get<bool>());
}

TEST_CASE("sweep CSV shape and determinism") {
  const std::vector<std::string> args{"sweep", "--m", "2", "--t-start", "10", "--t-stop", "40", "--t-step", "5"};
  const Captured a = invoke(args);
  const Captured b = invoke(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "t,s0,sm_iterated,im_single,discrepancy,envelope,margin_ratio,error");
  CHECK(rows[1].rfind("10,", 0) == 0);
  CHECK(rows[1].find(",,") != std::string::npos);  // no envelope below e^e
  CHECK(rows[7].rfind("40,", 0) == 0);
}

TEST_CASE("sweep marks a row that lands on an ordinate") {
  const double g1 = testing_support::zeros100()[0];
  const Captured c =
      invoke({"sweep", "--t-start", format_number(g1), "--t-stop", format_number(g1), "--t-step", "1"});
  REQUIRE(c.code == kExitOk);
  const auto rows = lines(c.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].find("midpoint") != std::string::npos);
  CHECK(rows[1].find("sm:") == std::string::npos);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "argbound_cli_test.csv";
  const Captured c = invoke({"envelope", "--t", "500", "--out", path.string()});
  CHECK(c.code == kExitOk);
  CHECK(c.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "m,t,k_total,envelope");
  std::filesystem::remove(path);
  CHECK(invoke({"envelope", "--t", "500", "--out", "/nonexistent/dir/x.csv"}).code == kExitConfig);
}

TEST_CASE("helpers") {
  RunConfig cfg;
  CHECK(resolve_x(cfg, 30.0).clamped);
  CHECK(resolve_x(cfg, 30.0).x == 4.0);
  CHECK(resolve_x(cfg, 1e3).x == doctest::Approx(std::log(1e3)));
  CHECK_FALSE(resolve_x(cfg, 1e3).clamped);
  cfg.x_policy = XPolicy::fixed;
  cfg.x_value = 50.0;
  CHECK(resolve_x(cfg, 10.0).x == 50.0);
  CHECK_THROWS_AS(resolve_x(cfg, 5.0), Error);

  CHECK(sweep_grid(1.0, 2.0, 0.1).size() == 11);
  CHECK(sweep_grid(5.0, 5.0, 1.0).size() == 1);
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(resolve_zero_table("/x/y.txt") == std::filesystem::path("/x/y.txt"));
}
