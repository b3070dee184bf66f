#ifndef GVD_ACCEPTANCE_HPP
#define GVD_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gvd {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20250810;
  std::string only;  // substring filter on criterion ids; empty = all
  int threads = 1;
  int timeout_secs = 0;  // 0 = no budget
};

// Runs the verification suite: one row per criterion, order-stable.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace gvd

#endif
