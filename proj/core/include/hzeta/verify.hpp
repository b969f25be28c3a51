#ifndef HZETA_VERIFY_HPP
#define HZETA_VERIFY_HPP

#include <string>
#include <vector>

#include "hzeta/types.hpp"

namespace hzeta {

struct VerifyCase {
  std::string inputs;
  Complex closed_form{};
  Complex oracle{};
  double abs_delta = 0.0;
  bool pass = false;
  std::string error;  // nonempty if the case itself failed to evaluate
};

struct VerifySuiteResult {
  std::string suite;
  double tol = 0.0;
  std::vector<VerifyCase> cases;
  int pass_count = 0;
  int fail_count = 0;
};

/// Suites: theorem1, theorem2, theorem3, theorem4, appendix, wilton, casimir.
/// Each compares closed forms against an independent oracle on a fixed grid;
/// a case passes when |closed - oracle| <= tol*(1 + |oracle|).
VerifySuiteResult run_verify(const std::string& suite, double tol);

std::vector<std::string> verify_suite_names();

}  // namespace hzeta

#endif
