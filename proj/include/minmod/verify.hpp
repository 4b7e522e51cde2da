/// @file verify.hpp
/// @brief Named verification suites producing machine-readable reports.
///
/// Each suite re-runs a bundle of the library's defining identities and
/// returns a VerificationReport: one CheckResult per identity, carrying a
/// stable dotted id, a functional reference tag naming the identity family,
/// pass/fail status, an optional numeric residual (absent for exact
/// rational checks), and a one-line detail.  A check that throws is
/// recorded as a failure with the exception text in its detail; the rest of
/// the suite still runs.  Reports are deterministic for fixed VerifyOptions
/// except for the wall_time field.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace minmod {

enum class CheckStatus { Pass, Fail };

struct CheckResult {
  std::string id;   ///< stable dotted identifier, e.g. "ode.table.nu13"
  std::string ref;  ///< functional tag, e.g. "indicial:table"
  CheckStatus status = CheckStatus::Fail;
  std::optional<double> residual;  ///< set for floating-point checks only
  std::string detail;              ///< description, or failure diagnostics
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double wall_time = 0.0;  ///< seconds

  bool passed() const;
  int failures() const;
};

struct VerifyOptions {
  long long truncation = 64;  ///< q-window for the exact suites
  double fd_step = 1e-5;      ///< step for the finite-difference lemmas
  int rk4_density = 200;      ///< RK4 steps per unit of path arclength
};

/// The suite catalog in canonical order: qseries, modforms, characters,
/// ode, symident, numeric, hypergeom.
const std::vector<std::string>& suite_names();

/// Runs one suite by name.  Throws std::invalid_argument for an unknown
/// name or for options violating a precondition (the characters and ode
/// suites require truncation >= 16 of headroom for their kernel checks).
VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& options = {});

/// Runs every suite on a pool of `jobs` worker threads (jobs <= 0 picks
/// min(#suites, hardware_concurrency)) and assembles the reports serially
/// in catalog order, so the output is identical to running one by one.
std::vector<VerificationReport> run_all(const VerifyOptions& options = {},
                                        int jobs = 0);

}  // namespace minmod
