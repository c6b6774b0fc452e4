#ifndef QGAUSS_CLI_HPP
#define QGAUSS_CLI_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgauss/identities.hpp"

namespace qgauss::cli {

/// Command line misuse (bad flag, malformed range, unknown identity).
/// Mapped to exit code 2.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A "lo..hi" pair of bound expressions; a bare expression means lo = hi.
struct RangeSpec {
  std::string lo;
  std::string hi;
};

RangeSpec parse_range(const std::string& text);

/// Evaluates a bound expression: integer literals and names of enclosing
/// loop variables combined with + and - only (e.g. "a+1", "0..x+y" halves).
long eval_bound(const std::string& text, const Params& env);

/// Exit codes: 0 all checks pass, 1 mathematical failure found, 2 usage
/// error, 3 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qgauss::cli

#endif
