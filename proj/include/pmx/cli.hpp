#ifndef PMX_CLI_HPP_
#define PMX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pmx {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
};

// Runs the pmx command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmx

#endif  // PMX_CLI_HPP_
