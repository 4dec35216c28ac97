#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehnlab {

  // Exit codes of the command line.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_failure      = 1;
  inline constexpr int exit_usage        = 2;
  inline constexpr int exit_inconclusive = 3;

  // args excludes the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace dehnlab
