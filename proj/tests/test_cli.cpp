#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "exwave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = exwave::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

int count_prefix(const std::string& text, const std::string& prefix) {
  int n = 0;
  for (const auto& l : lines(text)) n += l.rfind(prefix, 0) == 0;
  return n;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("exwave_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("verify passes the canonical suite") {
  const Result r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(count_prefix(r.out, "CHECK ") >= 18);
  CHECK(r.out.find(" FAIL") == std::string::npos);
  CHECK(lines(r.out).back().rfind("SUMMARY ", 0) == 0);
}

TEST_CASE("verify passes in SI units") {
  CHECK(run({"--units", "si", "verify"}).code == 0);
}

TEST_CASE("tightening any one tolerance below the achieved value fails") {
  const Result base = run({"verify", "--kind", "electron"});
  REQUIRE(base.code == 0);
  int tried = 0;
  for (const auto& l : lines(base.out)) {
    std::istringstream in(l);
    std::string tag, name, value, threshold, status;
    if (!(in >> tag >> name >> value >> threshold >> status) || tag != "CHECK") continue;
    if (name.rfind("residual.", 0) != 0) continue;
    const double achieved = std::stod(value);
    if (achieved <= 0.0) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.17g", name.c_str(), achieved / 2);
    const Result tight = run({"verify", "--kind", "electron", "--tolerance", buf});
    CHECK(tight.code == 1);
    CHECK(tight.out.find("CHECK " + name + " ") != std::string::npos);
    ++tried;
  }
  CHECK(tried >= 5);
}

TEST_CASE("an off-shell omega fails verification") {
  CHECK(run({"verify", "--kind", "electron", "--omega-scale", "1.1"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--units", "cgs", "verify"}).code == 2);
  CHECK(run({"verify", "--tolerance", "no.such.check=1"}).code == 2);
  CHECK(run({"verify", "--N", "8"}).code == 2);
  CHECK(run({"--out", "/nonexistent/dir/x.csv", "compton"}).code == 2);
}

TEST_CASE("outputs are byte-deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify"}, {"compton"}, {"relativity"}, {"fields"},
        {"--format", "json", "spin"}, {"interaction", "--path"}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("compton table") {
  const Result r = run({"compton"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0] == "theta_deg,delta_lambda,lambda_out,nu_out,u_recoil");
  CHECK(rows[1].rfind("0,0,", 0) == 0);
  CHECK(rows[19].rfind("180,", 0) == 0);
}

TEST_CASE("relativity table") {
  const Result r = run({"relativity"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "beta,gamma,phi_ratio,vp_ratio,energy_ratio");
}

TEST_CASE("fields dump headers") {
  const Result r = run({"fields"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[0] == "x,y,z,t,value");
  CHECK(r.out == run({"fields", "--dump", "rho"}).out);
  CHECK(lines(r.out).size() == 65);
  const Result e = run({"fields", "--dump", "E"});
  REQUIRE(e.code == 0);
  CHECK(lines(e.out)[0] == "x,y,z,t,vx,vy,vz");
  CHECK(run({"fields", "--dump", "nope"}).code == 2);
}

TEST_CASE("json output parses") {
  const Result r = run({"--format", "json", "relativity", "--steps", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0].contains("energy_ratio"));
}

TEST_CASE("out writes the file") {
  const auto path = temp_path("compton.csv");
  const auto svg = temp_path("compton.svg");
  const Result r = run({"--out", path.string(), "compton", "--svg", svg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote 19 rows") != std::string::npos);
  CHECK(lines(slurp(path)).size() == 20);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);
  std::filesystem::remove(path);
  std::filesystem::remove(svg);
}

TEST_CASE("config file supplies options") {
  const auto path = temp_path("config.toml");
  {
    std::ofstream cfg(path);
    cfg << "units = \"natural\"\n[relativity]\nsteps = 4\nbeta-max = 0.6\n";
  }
  const Result r = run({"--config", path.string(), "relativity"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4].rfind("0.59999999999999998,1.25", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"--config", path.string(), "relativity"}).code == 2);
}
