#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/run.hpp"

using cli::data;
using cli::run;

TEST_CASE("golden report for the bundled example") {
  const auto r = run("analyze --file " + data("example.json"));
  CHECK(r.status == 0);
  std::ifstream golden(data("example_analyze.json"), std::ios::binary);
  std::stringstream expected;
  expected << golden.rdbuf();
  CHECK(r.out == expected.str());
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::string& args :
       {"analyze --file " + data("example.json"), "classify --file " + data("example.json"),
        "check --which identity --trials 50 --seed 11 --file " + data("example.json"),
        "check --which dual --file " + data("example.json"),
        std::string("random --signs 1,-1,1,-1,1 --members 3,2 --seed 8 --boost 0.7")}) {
    const auto a = run(args), b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("classify exit codes") {
  const auto ok = run("classify --file " + data("example.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out.find("\"UniformlyNegative\"") != std::string::npos);
  const auto neutral = run("classify --file " + data("neutral.json"));
  CHECK(neutral.status == 0);
  CHECK(neutral.out.find("\"Neutral\"") != std::string::npos);
  CHECK(run("classify --file " + data("malformed.json")).status == 2);
  CHECK(run("classify --file " + data("missing.json")).status == 2);
  CHECK(run("classify").status == 2);
}

TEST_CASE("analyze exit codes") {
  CHECK(run("analyze --file " + data("example.json")).status == 0);
  CHECK(run("analyze --file " + data("hilbert.json")).status == 0);
  CHECK(run("analyze --file " + data("non_maximal.json")).status == 1);
  const auto bad = run("analyze --file " + data("indefinite_member.json"));
  CHECK(bad.status == 2);
  CHECK(bad.out.find("\"error\"") != std::string::npos);
  CHECK(run("analyze --file " + data("malformed.json")).status == 2);
  CHECK(run("analyze --file " + data("example.json") + " --variant other").status == 2);
  CHECK(run("analyze --file " + data("example.json") + " --tol -1").status == 2);
}

TEST_CASE("check exit codes") {
  const std::string ex = " --file " + data("example.json");
  CHECK(run("check --which onb --file " + data("canonical.json")).status == 0);
  CHECK(run("check --which onb" + ex).status == 1);
  CHECK(run("check --which union" + ex).status == 0);
  CHECK(run("check --which sum --file " + data("sum_pair.json")).status == 0);
  CHECK(run("check --which sum --file " + data("sum_violation.json")).status == 1);
  CHECK(run("check --which sum" + ex).status == 2);
  CHECK(run("check --which identity --trials 200 --seed 7" + ex).status == 0);
  CHECK(run("check --which identity --subset 0,1 --vector 1,1,1" + ex).status == 0);
  CHECK(run("check --which identity --subset 9 --vector 1,1,1" + ex).status == 2);
  CHECK(run("check --which identity --subset 0 --vector 1,1" + ex).status == 2);
  CHECK(run("check --which bessel --file " + data("neutral.json")).status == 0);
  CHECK(run("check --which bessel" + ex).status == 1);
  CHECK(run("check --which dual" + ex).status == 0);
  CHECK(run("check --which dual --file " + data("non_maximal.json")).status == 1);
  CHECK(run("check --which douglas --file " + data("douglas.json")).status == 0);
  CHECK(run("check --which douglas --a " + data("operator_a.json") + " --b " +
            data("operator_b.json"))
            .status == 0);
  CHECK(run("check --which douglas" + ex).status == 2);
  CHECK(run("check" + ex).status == 2);
  CHECK(run("check --which nothing" + ex).status == 2);
}

TEST_CASE("check payloads") {
  const auto onb = run("check --which onb --file " + data("canonical.json"));
  CHECK(onb.out.find("\"zeta\": 1.4142135623730951") != std::string::npos);
  const auto dg = run("check --which douglas --file " + data("douglas.json"));
  CHECK(dg.out.find("\"lambda\": 1") != std::string::npos);
  CHECK(dg.out.find("\"range_inclusion\": true") != std::string::npos);
  const auto ex = run("check --which union --file " + data("example.json"));
  CHECK(ex.out.find("\"strictly_disjoint\": false") != std::string::npos);
}

TEST_CASE("random exit codes") {
  CHECK(run("random --signs 1,1,-1 --members 2,1 --seed 3").status == 0);
  CHECK(run("random --signs 1,1,-1 --members 0,0").status == 2);
  CHECK(run("random --signs 1,1,-1 --members 1,1 --dims 1,1").status == 2);
  CHECK(run("random --signs 1,2,-1 --members 1,1").status == 2);
  CHECK(run("random --members 1,1").status == 2);
}

TEST_CASE("random output round-trips through analyze") {
  const auto path = std::filesystem::temp_directory_path() /
                    ("krein-roundtrip-" + std::to_string(::getpid()) + ".json");
  int passed = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const std::string signs = seed % 2 ? "1,-1,1,-1,1,1" : "1,1,-1";
    const auto gen = run("random --signs " + signs + " --members 2,2 --seed " +
                         std::to_string(seed) + (seed % 3 ? " --boost 0.8" : ""));
    REQUIRE(gen.status == 0);
    {
      std::ofstream f(path, std::ios::binary);
      f << gen.out;
    }
    const auto a = run("analyze --file " + path.string());
    CHECK(a.status == 0);
    passed += a.status == 0;
  }
  std::filesystem::remove(path);
  CHECK(passed == 100);
}

TEST_CASE("help and version") {
  CHECK(run("--help").status == 0);
  const auto v = run("--version");
  CHECK(v.status == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
  CHECK(run("").status == 2);
  CHECK(run("unknown").status == 2);
}
