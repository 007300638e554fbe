#ifndef SGSIZE_TOOLS_CLI_HPP_
#define SGSIZE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sgsize::cli {

  // Runs one command.  `args` excludes the program name.  Returns the
  // process exit code: 0 success, 1 a check failed or `validate` found a
  // violation, 2 malformed input or flags (including a non-associative table
  // given to any other command).
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace sgsize::cli

#endif  // SGSIZE_TOOLS_CLI_HPP_
