#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "run_config.hpp"

using namespace spintorus;
using namespace spintorus::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("spintorus_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run(const std::string& command, const Json& config, const fs::path& dir, std::string* err = nullptr) {
  std::ostringstream errs;
  CommandOptions options;
  options.out_dir = dir.string();
  auto result = run_command(command, parse_run_config(config), options, errs);
  if (err) *err = errs.str();
  return result;
}

int run_binary(const fs::path& config_file, const std::string& command) {
  const std::string cmd = std::string(SPINTORUS_CLI_PATH) + " " + command + " --config " + config_file.string() +
                          " --out " + config_file.parent_path().string() + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config parsing fills defaults") {
  const auto c = parse_run_config(Json::object());
  CHECK(c.rank == 3);
  CHECK(c.sites == 2);
  CHECK(c.eta == Complex(0.5, 0.0));
  CHECK(c.tolerances == default_tolerances());
  const auto spec = c.spec();
  CHECK(spec.theta[1] == Complex(0.26, 0.14));
}

TEST_CASE("config parsing rejects unknown and malformed fields") {
  CHECK_THROWS_AS((void)parse_run_config(Json{{"sites", 2}}), ConfigError);
  CHECK_THROWS_AS((void)parse_run_config(Json{{"N", "two"}}), ConfigError);
  CHECK_THROWS_AS((void)parse_run_config(Json{{"tolerances", {{"qybe", 1e-9}}}}), ConfigError);
  CHECK_THROWS_AS((void)parse_run_config(Json{{"tolerances", {{"QYBE", -1.0}}}}), ConfigError);
  CHECK_THROWS_AS((void)parse_run_config(Json{{"N", 2}, {"theta", Json::array({0.1})}}), ConfigError);
  CHECK_THROWS_AS((void)parse_run_config(Json::array()), ConfigError);
  const auto c = parse_run_config(Json{{"eta", {0.4, 0.1}}, {"tolerances", {{"QYBE", 1e-9}}}});
  CHECK(c.eta == Complex(0.4, 0.1));
  CHECK(c.tolerances.at("QYBE") == 1e-9);
}

TEST_CASE("verify passes on the default config") {
  const auto dir = scratch("verify");
  const auto r = run("verify", Json::object(), dir);
  CHECK(r.exit_code == kOk);
  CHECK(r.report["schema_version"] == kSchemaVersion);
  CHECK(r.report["config"]["N"] == 2);
  CHECK(fs::exists(dir / "verify.json"));
  for (const char* name : {"QYBE", "unitarity", "crossing", "fusion-rank", "twist-invariance", "commuting-transfer",
                           "exchange-relations", "vacuum-actions", "orthogonality", "identity-resolution",
                           "decompositions", "product-identity"}) {
    bool found = false;
    for (const auto& c : r.report["checks"]) {
      if (c["name"] == name) {
        found = true;
        CHECK(c["passed"] == true);
      }
    }
    CAPTURE(name);
    CHECK(found);
  }
}

TEST_CASE("duplicated theta is a config error naming the invariant") {
  const auto dir = scratch("dup");
  std::string err;
  const auto r = run("verify", Json{{"N", 2}, {"theta", {{0.1, 0.0}, {0.1, 0.0}}}}, dir, &err);
  CHECK(r.exit_code == kConfigError);
  CHECK(err.find("distinct") != std::string::npos);
}

TEST_CASE("seven sites exceed the dense budget") {
  const auto dir = scratch("budget");
  std::string err;
  const auto r = run("verify", Json{{"N", 7}}, dir, &err);
  CHECK(r.exit_code == kConfigError);
  CHECK(err.find("budget") != std::string::npos);
}

TEST_CASE("one-site spectrum report") {
  const auto dir = scratch("spectrum");
  const auto r = run("spectrum", Json{{"N", 1}}, dir);
  CHECK(r.exit_code == kOk);
  REQUIRE(r.report["records"].size() == 3);
  const Complex sinh_eta = std::sinh(Complex(0.5));
  for (const auto& rec : r.report["records"]) {
    const Complex ratio = complex_from_json(rec["lambda_at_theta"][0]) / sinh_eta;
    const int z = rec["z_charge"].get<int>();
    CHECK(std::abs(ratio - std::pow(kOmega, z)) < 1e-8);
  }
}

TEST_CASE("one-site BAE report covers every sector") {
  const auto dir = scratch("bae");
  const auto r = run("bae", Json{{"N", 1}}, dir);
  CHECK(r.exit_code == kOk);
  const auto& sectors = r.report["sectors_covered"];
  CHECK(sectors == Json::array({true, true, true}));
  const auto refused = run("bae", Json{{"N", 3}}, dir);
  CHECK(refused.exit_code == kConfigError);
}

TEST_CASE("two-site reconstruction report") {
  const auto dir = scratch("reconstruct");
  const auto r = run("reconstruct", Json::object(), dir);
  CHECK(r.exit_code == kOk);
  REQUIRE(r.report["states"].size() == 9);
  for (const auto& s : r.report["states"]) CHECK(s["residual"].get<double>() < 1e-8);
}

TEST_CASE("reports are byte-identical across reruns") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const char* command : {"verify", "spectrum", "reconstruct"}) {
    (void)run(command, Json{{"output_path", std::string(command) + ".json"}}, a);
    (void)run(command, Json{{"output_path", std::string(command) + ".json"}}, b);
    CAPTURE(command);
    CHECK(slurp(a / (std::string(command) + ".json")) == slurp(b / (std::string(command) + ".json")));
  }
}

TEST_CASE("csv export") {
  const auto dir = scratch("csv");
  std::ostringstream err;
  CommandOptions options;
  options.out_dir = dir.string();
  options.csv = true;
  const auto r = run_command("spectrum", parse_run_config(Json{{"N", 1}}), options, err);
  CHECK(r.exit_code == kOk);
  CHECK(fs::exists(dir / "spectrum.csv"));
}

TEST_CASE("binary exit codes") {
  const auto dir = scratch("binary");
  const auto write = [&](const std::string& name, const Json& j) {
    std::ofstream(dir / name) << j.dump();
    return dir / name;
  };
  CHECK(run_binary(write("ok.json", Json{{"N", 1}}), "spectrum") == 0);
  CHECK(run_binary(write("big.json", Json{{"N", 7}}), "verify") == 2);
  CHECK(run_binary(write("unknown.json", Json{{"colour", 1}}), "verify") == 2);
  CHECK(run_binary(dir / "missing.json", "verify") == 2);
  CHECK(run_binary(write("ok2.json", Json{{"N", 1}}), "frobnicate") == 2);
}
