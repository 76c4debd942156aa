#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcfrac/cli.hpp"

using namespace gcfrac::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gcfrac");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("deriv") {
  auto r = run_cli({"deriv", "--f", "x^2", "--kernel", "identity", "--alpha", "1", "--t", "3", "--format", "json"});
  CHECK(r.code == kOk);
  const auto j = parse(r);
  CHECK(j["command"] == "deriv");
  CHECK(j["results"][0]["value"].get<double>() == 6.0);
  CHECK(j["results"][1]["value"].get<double>() == doctest::Approx(6.0));

  r = run_cli({"deriv", "--f", "sin(x)", "--alpha", "0.5", "--t", "1", "--format", "json"});
  CHECK(parse(r)["results"][0]["value"].get<double>() == doctest::Approx(0.540302).epsilon(1e-6));

  r = run_cli({"deriv", "--f", "x", "--kernel", "sin(x)", "--alpha", "0.5", "--t", "4"});
  CHECK(r.code == kDomainError);
  CHECK_FALSE(r.err.empty());

  r = run_cli({"deriv", "--f", "x +", "--t", "1"});
  CHECK(r.code == kParseError);
  CHECK(r.err.find("offset 3") != std::string::npos);

  r = run_cli({"deriv", "--f", "ln(x)", "--t", "-1"});
  CHECK(r.code == kDomainError);

  r = run_cli({"deriv", "--f", "sin(50*x)", "--alpha", "0.5", "--t", "1", "--max-steps", "5", "--tol-rel", "1e-16"});
  CHECK(r.code == kNotConverged);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == kParseError);
  CHECK(run_cli({"deriv", "--f", "x"}).code == kParseError);
  CHECK(run_cli({"deriv", "--f", "x", "--t", "1", "--alpha", "2"}).code == kParseError);
  CHECK(run_cli({"deriv", "--f", "x", "--t", "1", "--format", "xml"}).code == kParseError);
  CHECK(run_cli({"verify", "--theorem", "nope"}).code == kParseError);
  CHECK(run_cli({"--help"}).code == kOk);
}

TEST_CASE("integ") {
  auto r = run_cli({"integ", "--f", "1", "--alpha", "0.5", "--a", "0", "--b", "4", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(parse(r)["results"][0]["value"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(parse(r)["results"][0]["substituted"] == true);

  r = run_cli({"integ", "--f", "x", "--alpha", "1", "--a", "0", "--b", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("value         2\n") != std::string::npos);

  r = run_cli({"integ", "--f", "1/x", "--alpha", "1", "--a", "0", "--b", "1"});
  CHECK(r.code == kQuadratureFailed);
}

TEST_CASE("table") {
  auto r = run_cli({"table", "--x", "0", "--alpha", "1", "--a", "1", "--format", "json"});
  CHECK(r.code == kOk);
  auto j = parse(r);
  CHECK(j["results"].size() == 6);
  CHECK(j["results"][2]["closed"].get<double>() == doctest::Approx(1.0));

  r = run_cli({"table", "--x", "1", "--alpha", "0.5", "--a", "2", "--b", "-1", "--format", "json"});
  j = parse(r);
  CHECK(j["results"][1]["closed"].get<double>() == doctest::Approx(14.778112).epsilon(1e-7));
  CHECK(j["results"][4]["closed"].is_null());
  CHECK(j["results"][4].contains("error"));
  CHECK(j["results"][5]["closed"].is_number());

  r = run_cli({"table", "--x", "1", "--alpha", "0.5", "--a", "2", "--b", "-1"});
  CHECK(r.out.find("domain error") != std::string::npos);
}

TEST_CASE("rolle and mvt") {
  auto r = run_cli({"rolle", "--f", "(x-1)*(x-3)", "--alpha", "0.5", "--a", "1", "--b", "3", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(parse(r)["summary"]["c"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));

  r = run_cli({"mvt", "--f", "x", "--alpha", "0.5", "--a", "1", "--b", "4", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(parse(r)["summary"]["c"].get<double>() == doctest::Approx(2.25).epsilon(1e-9));

  r = run_cli({"rolle", "--f", "x", "--alpha", "0.5", "--a", "1", "--b", "3"});
  CHECK(r.code == kHypothesisFailed);
  CHECK(r.err.find("f(a) = f(b)") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "--alpha-grid", "1.0", "--kernel", "identity"});
  CHECK(r.code == kOk);
  r = run_cli({"verify", "--theorem", "quotient", "--orientation", "paper"});
  CHECK(r.code == kVerifyFailed);

  const auto a = run_cli({"verify", "--kernel", "log1p", "--alpha-grid", "0.3,0.8", "--format", "json"});
  const auto b = run_cli({"verify", "--kernel", "log1p", "--alpha-grid", "0.3,0.8", "--format", "json"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const auto j = parse(a);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"].get<std::size_t>() == j["results"].size());

  const auto csv = run_cli({"verify", "--kernel", "exp", "--alpha-grid", "0.5", "--format", "csv"});
  CHECK(csv.out.rfind("theorem,kernel,", 0) == 0);
}

TEST_CASE("json numbers round trip") {
  const auto r = run_cli({"deriv", "--f", "exp(2*x)", "--kernel", "power:2", "--alpha", "0.5", "--t", "2", "--format", "json"});
  const double closed = parse(r)["results"][0]["value"].get<double>();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", closed);
  CHECK(std::stod(buf) == closed);
  CHECK(r.out.find(nlohmann::json(closed).dump()) != std::string::npos);
}

TEST_CASE("config file") {
  RunSpec spec;
  apply_config_text(spec, "# defaults\nkernel = power:2\nalpha = 0.25\n\ntol_rel = 1e-9  # tighter\nformat = csv\n");
  CHECK(spec.kernel == "power:2");
  CHECK(spec.alpha == 0.25);
  CHECK(spec.numeric.tol_rel == 1e-9);
  CHECK(spec.format == Format::Csv);
  CHECK_THROWS(apply_config_text(spec, "colour = blue\n"));
  CHECK_THROWS(apply_config_text(spec, "alpha = half\n"));
  CHECK_THROWS(apply_config_text(spec, "alpha\n"));

  const std::string path = "gcfrac_test_config.txt";
  std::ofstream(path) << "kernel = exp\nalpha = 0.5\n";
  auto r = run_cli({"deriv", "--f", "x", "--t", "1", "--config", path, "--format", "json"});
  CHECK(r.code == kOk);
  auto j = parse(r);
  CHECK(j["spec"]["kernel"] == "exp");
  // explicit flags win over the file
  r = run_cli({"deriv", "--f", "x", "--t", "1", "--config", path, "--alpha", "1", "--format", "json"});
  CHECK(parse(r)["spec"]["alpha"].get<double>() == 1.0);
  std::remove(path.c_str());
  CHECK(run_cli({"deriv", "--f", "x", "--t", "1", "--config", "/nonexistent/cfg"}).code == kParseError);
}
