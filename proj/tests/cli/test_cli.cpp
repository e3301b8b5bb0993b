#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPMETRIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("density rows") {
  const auto r = run("density --domain disk --z 0,0");
  CHECK(r.code == 0);
  CHECK(r.out == "re,im,lambda,log_lambda\n0,0,1,0\n");
  const auto c = run("density --metric conical:0.5 --z 0.25");
  CHECK(c.out.find("0.25,0,1.3333333333333333,") != std::string::npos);
  const auto g = run("density --metric pdisk --grid polar:0.1,0.5,3,4");
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 13);
}

TEST_CASE("pulled-back density agrees with the phi witness") {
  const auto r = run("density --metric pull:phi:disk --z 0.99 --output json");
  const auto j = nlohmann::json::parse(r.out);
  const double lambda = j["rows"][0]["lambda"];
  const double x = 0.99;
  CHECK(((1 - x * x) * lambda - 1) / ((1 - x) * (1 - x)) == doctest::Approx(-0.16708680903920639).epsilon(1e-9));
}

TEST_CASE("distance line") {
  const auto r = run("distance --domain pdisk --z1 0.1,0 --z2 -0.1,0");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("distance,0.63801351068923", 0) == 0);
  CHECK(r.out.find(",LiftMinimization,") != std::string::npos);
  const auto o = run("distance --domain disk --z1 0,0.3 --z2 0,-0.3 --oracle-grid 200");
  CHECK(o.out.find(",GridOracle,") != std::string::npos);
}

TEST_CASE("curvature line") {
  const auto r = run("curvature --metric annulus:0.5 --z 0.7,0.1 --h 1e-3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("curvature,-4.0000", 0) == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify curvature").code == 0);
  CHECK(run("verify unknown-suite").code == 2);
  CHECK(run("verify phi --tol limit=1e-14").code == 1);
  CHECK(run("density --metric nonsense --z 0").code == 2);
  CHECK(run("distance --domain disk --z1 0").code == 2);
  CHECK(run("--output xml verify phi").code == 2);
}

TEST_CASE("verify json schema") {
  const auto r = run("verify hopf --output json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "hopf");
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 42);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("value"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("tol"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("provenance"));
  }
}

TEST_CASE("example1 witness json") {
  const auto r = run("verify example1 --output json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["extrapolated_limit"]) == doctest::Approx(-1.0).epsilon(2e-2));
  CHECK(j["functional_values"].size() == j["sample_points"].size());
  const auto csv = run("verify annulus-sharpness:0.5");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("sample,functional_value\n", 0) == 0);
}

TEST_CASE("output is byte-identical across runs") {
  CHECK(run("verify beardon-minda --seed 9").out == run("verify beardon-minda --seed 9").out);
  CHECK(run("verify curvature --seed 9 --output json").out == run("verify curvature --seed 9 --output json").out);
  CHECK(run("verify beardon-minda --seed 9").out != run("verify beardon-minda --seed 10").out);
}

TEST_CASE("rigidity sample round-trips into fit") {
  const std::string path = "cli_rigidity_sample.csv";
  {
    const auto s = run("rigidity sample --metric pull:example1:pdisk --reference pdisk --q 0.5");
    CHECK(s.code == 0);
    std::ofstream(path) << s.out;
  }
  const auto f = run("rigidity fit --input " + path + " --setting puncture");
  CHECK(f.code == 0);
  const auto j = nlohmann::json::parse(f.out);
  CHECK(double(j["beta"]) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(j["classification"] == "Inconclusive");
  const auto c = run("rigidity classify --setting conical:0.5 --beta 1.2 --r2 0.999");
  CHECK(nlohmann::json::parse(c.out)["classification"] == "RigidityForced");
  CHECK(run("rigidity fit --input does-not-exist.csv").code == 2);
  std::remove(path.c_str());
}

TEST_CASE("liouville subcommands") {
  const auto s = run("liouville solve --w0 -0.6931471805599453 --dw0 1 --t0 -1 --t1 -5 --steps 10000");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("t,w,lambda,E\n-5,-2.30258509", 0) == 0);
  const auto c = run("liouville classify --family conical:0.3");
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["kind"] == "Conical");
  CHECK(double(j["alpha"]) == doctest::Approx(0.3).epsilon(1e-3));
  CHECK(nlohmann::json::parse(run("liouville classify --family pdisk").out)["kind"] == "Logarithmic");
  CHECK(run("liouville solve --w0 0 --dw0 1 --t0 0 --t1 5 --steps 1000").code == 1);
  CHECK(run("liouville solve --w0 0 --dw0 1 --t0 0 --t1 5 --steps 1000 --truncate").code == 0);
}
