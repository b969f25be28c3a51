#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "hzeta/casimir.hpp"
#include "hzeta/closed_form_integrals.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("eval basics and exit code 0") {
  const RunResult r = run("eval moment_integral --s 3");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value_re"].get<double>() == 0.5);
  CHECK(j["value_im"].get<double>() == 0.0);
}

TEST_CASE("eval c1_closed at eps 0") {
  const RunResult r = run("eval c1_closed --eps 0");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["value_re"].get<double>() - std::pow(2.0, -11.0) / 9.0) <= 1e-15);
}

TEST_CASE("eval agrees with the library bit-exactly") {
  const RunResult r = run("eval integral_I --a 2.5 --b 3.5");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const hzeta::ValueWithError v = hzeta::integral_I(2.5, 3.5);
  CHECK(j["value_re"].get<double>() == v.value.real());
  CHECK(j["value_im"].get<double>() == v.value.imag());
  CHECK(j["abs_err"].get<double>() == v.abs_err);
}

TEST_CASE("complex parameter grammar") {
  const RunResult r = run("eval integral_I --a 1.3+2i --b 1.3-2i");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const hzeta::ValueWithError v =
      hzeta::integral_I(hzeta::Complex(1.3, 2.0), hzeta::Complex(1.3, -2.0));
  CHECK(j["value_re"].get<double>() == v.value.real());
}

TEST_CASE("exit code contract") {
  CHECK(run("eval c0 --eps 1.5").exit_code == 2);          // domain error
  CHECK(run("eval no_such_target --a 1").exit_code == 2);  // unknown target
  CHECK(run("eval integral_I --a 3 --b 2.5").exit_code == 3);  // near-singular
  CHECK(run("eval integral_I --a 3 --b 2.5 --force-limit").exit_code == 0);
  CHECK(run("verify appendix --tol 0").exit_code == 1);  // verify failure
  CHECK(run("verify appendix --tol 1e-9").exit_code == 0);
}

TEST_CASE("sweep row counts and error rows") {
  {
    const RunResult r = run("sweep c1_closed --eps 0:0.9:10");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).size() == 10);
  }
  {
    const RunResult r = run("sweep integral_I --a 1.5:4.5:7 --b 1.5:4.5:7");
    REQUIRE(r.exit_code == 0);
    const json rows = json::parse(r.out);
    CHECK(rows.size() == 49);
    int errors = 0;
    for (const auto& row : rows)
      if (row.contains("error")) ++errors;
    CHECK(errors > 0);  // integer grid points are refused but the sweep continues
    CHECK(errors < 49);
  }
}

TEST_CASE("sweep CSV format") {
  const RunResult r = run("sweep K_closed --eps 0:0.9:19 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "eps,re,im,abs_err,error");
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 20);  // header + 19 rows, LF endings
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("deterministic byte-identical output") {
  const std::string cmd = "eval riemann_zeta --s 2.3";
  CHECK(run(cmd).out == run(cmd).out);
  const std::string sweep_cmd = "sweep c1_closed --eps 0:0.5:5 --format csv";
  CHECK(run(sweep_cmd).out == run(sweep_cmd).out);
}

TEST_CASE("JSON round-trips doubles exactly") {
  const RunResult r = run("eval riemann_zeta --s 2.7");
  const json j = json::parse(r.out);
  // serialize the parsed doc again; values must re-parse to the same bits
  const json j2 = json::parse(j.dump());
  CHECK(j["value_re"].get<double>() == j2["value_re"].get<double>());
  CHECK(j["abs_err"].get<double>() == j2["abs_err"].get<double>());
}

TEST_CASE("casimir report") {
  const RunResult r = run("casimir --eps 0.5 --n 1");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["eps"].get<double>() == 0.5);
  CHECK(j.contains("c0"));
  CHECK(j.contains("c1"));
  CHECK(j.contains("K_closed"));
  CHECK(j.contains("amplitude_DD"));
  const double c1 = j["c1"].get<double>();
  CHECK(std::abs(c1 - j["c1_assembled"].get<double>()) <= 1e-9 * (1.0 + std::abs(c1)));
  const RunResult r0 = run("casimir --eps 0");
  const json j0 = json::parse(r0.out);
  CHECK(!j0.contains("amplitude_DD"));
}
