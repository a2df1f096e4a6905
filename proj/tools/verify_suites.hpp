#pragma once

#include <string>
#include <vector>

namespace gfrac::cli {

struct VerifyCheck {
  std::string check;
  std::string params;
  double worst = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Runs the named verification suite ("cf", "gap", "schur", "hyp", "pick"
/// or "all"). Random sample points are drawn from the given seed.
std::vector<VerifyCheck> run_verify_suite(const std::string& suite, unsigned seed);

}  // namespace gfrac::cli
