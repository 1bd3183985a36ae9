// Command-line front end.

#ifndef MALCEV_CLI_HPP_
#define MALCEV_CLI_HPP_

#include <ostream>  // for ostream

namespace malcev::cli {

  enum ExitCode : int {
    success         = 0,  // also: predicate true
    predicate_false = 1,  // also: a verification suite reported violations
    usage_error     = 2,
    internal_error  = 3,  // an invariant of the theory failed, e.g.
                          // AlignmentViolation
  };

  //! Parses argv, runs one subcommand and returns the process exit code.
  //! Normal output goes to `out` (or the --out file), diagnostics to `err`.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace malcev::cli

#endif  // MALCEV_CLI_HPP_
