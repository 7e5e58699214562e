#ifndef NCALG_CLI_HPP_
#define NCALG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ncalg::cli {

  enum ExitCode : int { verified = 0, refuted = 1, input_error = 2 };

  /// Runs one subcommand. `args` excludes the program name. The report
  /// goes to `out`, diagnostics and usage to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ncalg::cli

#endif  // NCALG_CLI_HPP_
