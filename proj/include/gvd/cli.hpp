#ifndef GVD_CLI_HPP
#define GVD_CLI_HPP

#include <string>
#include <vector>

namespace gvd {

// Full command-line front end.  Exit status: 0 on success, 1 on a verdict
// failure (e.g. --expect not met or a failed verification row), 2 on input
// errors.
int run_cli(int argc, const char* const* argv);

int run_cli(const std::vector<std::string>& args);  // without argv[0]

}  // namespace gvd

#endif
