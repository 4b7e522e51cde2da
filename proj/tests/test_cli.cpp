/// @file test_cli.cpp
/// @brief End-to-end tests of the command-line binary: pinned example
///        outputs, JSON schemas, format handling, the environment-variable
///        default override, and exit codes.
///
/// The binary path arrives via the MINMOD_CLI_PATH compile definition.
/// Every invocation goes through a scrubbed environment (MINMOD_TRUNC
/// unset) unless a test sets it on purpose.

#include "minmod/rational.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "test_support.hpp"

using minmod::Rational;
using minmod::parse_rational;
using minmod::rat;
using minmod::rational_pow;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string path =
      "/tmp/minmod_cli_test_" + std::to_string(++counter) + ".out";
  const std::string cmd = "env -u MINMOD_TRUNC " + env +
                          std::string(MINMOD_CLI_PATH) + " " + args + " > " +
                          path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(path);
  std::ostringstream body;
  body << in.rdbuf();
  r.output = body.str();
  std::remove(path.c_str());
  return r;
}

json parse(const RunResult& r) { return json::parse(r.output); }

Rational ppow(long long base, int e) { return rational_pow(rat(base), e); }

}  // namespace

int main() {
  SECTION("derive-ode pinned examples");
  {
    const RunResult r = run_cli("derive-ode --nu 5");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK_EQ(doc.at("nu").get<int>(), 5);
    CHECK_EQ(doc.at("M").get<int>(), 2);
    CHECK_EQ(doc.at("alphas").size(), 1u);
    CHECK_EQ(doc.at("alphas").at("0").get<std::string>(),
             std::string("-11/3600"));
    CHECK(!doc.contains("alpha_cusp"));

    const RunResult r13 = run_cli("derive-ode --nu 13");
    CHECK_EQ(r13.exit_code, 0);
    const json d13 = parse(r13);
    CHECK_EQ(d13.at("alphas").size(), 5u);
    CHECK(parse_rational(d13.at("alphas").at("4").get<std::string>()) ==
          Rational(-rat(7 * 13 * 67) / ppow(156, 2)));
    CHECK(parse_rational(d13.at("alphas").at("1").get<std::string>()) ==
          Rational(rat(8LL * 3 * 5 * 13 * 31 * 2437) / ppow(156, 5)));
    CHECK(parse_rational(d13.at("alpha_cusp").get<std::string>()) ==
          Rational(Rational(ppow(5, 2) * rat(7 * 11) * ppow(23, 2) *
                            rat(167)) /
                   Rational(ppow(2, 5) * ppow(3, 2) * ppow(13, 4) *
                            rat(691))));
  }

  SECTION("chars pinned example");
  {
    const RunResult r = run_cli("chars --nu 5 --s 2 --trunc 8");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK_EQ(doc.at("offset").get<std::string>(), std::string("-1/60"));
    CHECK_EQ(doc.at("kappa").get<std::string>(), std::string("-1/60"));
    CHECK_EQ(doc.at("step").get<long long>(), 1LL);
    const json want =
        json::array({"1", "1", "1", "1", "2", "2", "3", "3"});
    CHECK(doc.at("coeffs") == want);

    // Both construction routes serialize identically.
    const RunResult rs = run_cli("chars --nu 5 --s 2 --trunc 8 --route sum");
    CHECK_EQ(rs.exit_code, 0);
    CHECK(parse(rs).at("coeffs") == want);
  }

  SECTION("forms output and csv");
  {
    const RunResult r = run_cli("forms --name E4 --trunc 4");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK_EQ(doc.at("name").get<std::string>(), std::string("E4"));
    CHECK_EQ(doc.at("weight").get<std::string>(), std::string("4"));
    CHECK_EQ(doc.at("offset").get<std::string>(), std::string("0"));
    CHECK(doc.at("coeffs") ==
          json::array({"1", "240", "2160", "6720"}));

    const RunResult csv = run_cli("forms --name E4 --trunc 3 --format csv");
    CHECK_EQ(csv.exit_code, 0);
    CHECK_EQ(csv.output,
             std::string("exponent,numerator,denominator\n"
                         "0,1,1\n1,240,1\n2,2160,1\n"));

    // Fractional lattice: eta's leading exponent is 1/24.
    const RunResult eta = run_cli("forms --name Eta --trunc 3 --format csv");
    CHECK_EQ(eta.exit_code, 0);
    CHECK_EQ(eta.output,
             std::string("exponent,numerator,denominator\n"
                         "1/24,1,1\n25/24,-1,1\n49/24,-1,1\n"));
  }

  SECTION("verify subcommand");
  {
    const RunResult r = run_cli("verify --suite qseries");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK(doc.at("passed").get<bool>());
    CHECK_EQ(doc.at("reports").size(), 1u);
    const json& report = doc.at("reports").at(0);
    CHECK_EQ(report.at("suite").get<std::string>(),
             std::string("qseries"));
    CHECK(report.at("checks").size() >= 5u);
    for (const auto& c : report.at("checks")) {
      CHECK_EQ(c.at("status").get<std::string>(), std::string("pass"));
      CHECK(c.contains("id"));
      CHECK(c.contains("ref"));
      CHECK(c.contains("detail"));
    }

    // The numeric suite records residuals.
    const RunResult rn = run_cli("verify --suite numeric");
    CHECK_EQ(rn.exit_code, 0);
    const json dn = parse(rn);
    bool saw_residual = false;
    for (const auto& c : dn.at("reports").at(0).at("checks"))
      saw_residual = saw_residual || c.contains("residual");
    CHECK(saw_residual);
  }

  SECTION("numeric subcommands");
  {
    const RunResult r =
        run_cli("numeric integrate --from 1.5i --to 0.9i --s 2 --json");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK(doc.at("calibrated_at_start").get<bool>());
    CHECK(doc.at("passed").get<bool>());
    CHECK(doc.at("rel_error_one").get<double>() < 1e-6);
    CHECK(doc.at("rel_error_a1").get<double>() < 1e-6);
    CHECK(doc.at("steps").get<long long>() >= 240);

    const RunResult ro = run_cli("numeric omega-check --tau 0.3+1.1i");
    CHECK_EQ(ro.exit_code, 0);
    const json od = parse(ro);
    CHECK(od.at("tau_residual").get<double>() < 1e-6);
    CHECK(od.at("lambda_residual").get<double>() < 1e-9);

    const RunResult rd = run_cli("numeric dtau-check --tau -0.4+0.9i");
    CHECK_EQ(rd.exit_code, 0);
    CHECK(parse(rd).at("fd_residual").get<double>() < 1e-6);

    const RunResult rs = run_cli("numeric smatrix");
    CHECK_EQ(rs.exit_code, 0);
    const json sd = parse(rs);
    CHECK(sd.at("residual").get<double>() < 1e-7);
    CHECK_NEAR(sd.at("matrix").at(0).at(0).get<double>(),
               -0.85065080835204, 1e-12);

    const RunResult re = run_cli("numeric eval --name j --tau i");
    CHECK_EQ(re.exit_code, 0);
    CHECK_NEAR(parse(re).at("value").at("re").get<double>(), 1728.0, 1e-5);
  }

  SECTION("hypergeom subcommand");
  {
    const RunResult r = run_cli("hypergeom --k -7/10 --trunc 5");
    CHECK_EQ(r.exit_code, 0);
    const json doc = parse(r);
    CHECK_EQ(doc.at("A").get<std::string>(), std::string("3/10"));
    CHECK_EQ(doc.at("B").get<std::string>(), std::string("-1/10"));
    CHECK_EQ(doc.at("C").get<std::string>(), std::string("3/5"));
    CHECK_EQ(doc.at("gauge_exponent").get<std::string>(),
             std::string("-3/20"));
    CHECK(doc.at("satisfies_ode").get<bool>());
    CHECK_EQ(doc.at("solutions").size(), 2u);
    CHECK_EQ(doc.at("solutions").at(0).at("coefficients").at(1)
                 .get<std::string>(),
             std::string("-1/20"));
    CHECK_EQ(doc.at("solutions").at(1).at("exponent_at_0")
                 .get<std::string>(),
             std::string("2/5"));

    CHECK_EQ(run_cli("hypergeom --k 1/2").exit_code, 2);
  }

  SECTION("environment default override");
  {
    // MINMOD_TRUNC sets the default window; an explicit flag beats it.
    const RunResult r =
        run_cli("chars --nu 5 --s 1", "MINMOD_TRUNC=10 ");
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(parse(r).at("coeffs").size(), 10u);

    const RunResult rf =
        run_cli("chars --nu 5 --s 1 --trunc 6", "MINMOD_TRUNC=10 ");
    CHECK_EQ(rf.exit_code, 0);
    CHECK_EQ(parse(rf).at("coeffs").size(), 6u);
  }

  SECTION("output file");
  {
    const std::string path = "/tmp/minmod_cli_test_outfile.json";
    const RunResult r = run_cli("derive-ode --nu 5 --out " + path);
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    CHECK(static_cast<bool>(in));
    json doc;
    in >> doc;
    CHECK_EQ(doc.at("alphas").at("0").get<std::string>(),
             std::string("-11/3600"));
    std::remove(path.c_str());
  }

  SECTION("usage errors exit with 2");
  {
    CHECK_EQ(run_cli("chars --nu 4 --s 1").exit_code, 2);
    CHECK_EQ(run_cli("chars --nu 5 --s 9").exit_code, 2);
    CHECK_EQ(run_cli("verify --suite nonesuch").exit_code, 2);
    CHECK_EQ(run_cli("verify --suite ode --trunc 8").exit_code, 2);
    CHECK_EQ(run_cli("verify --format csv").exit_code, 2);
    CHECK_EQ(run_cli("forms --name E5").exit_code, 2);
    CHECK_EQ(run_cli("numeric eval --name E4 --tau 0.01i").exit_code, 2);
    CHECK_EQ(run_cli("nonesuch").exit_code, 2);
    CHECK_EQ(run_cli("").exit_code, 2);
    CHECK_EQ(run_cli("--help").exit_code, 0);
  }

  return testkit::summary("cli");
}
