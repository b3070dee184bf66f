// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.  Exit status is
// nonzero when any row fails.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "gvd/acceptance.hpp"

int main(int argc, char** argv) {
  gvd::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      opts.only = argv[++i];
    else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      opts.threads = std::atoi(argv[++i]);
  }

  bool all = true;
  for (const auto& row : gvd::run_acceptance(opts)) {
    std::printf("%-28s %s  (%.2fs)  %s\n", row.id.c_str(),
                row.pass ? "PASS" : "FAIL", row.seconds, row.actual.c_str());
    all = all && row.pass;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
