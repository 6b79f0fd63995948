#pragma once

#include "mubound/rational.hpp"

#include <iosfwd>
#include <string_view>

namespace mubound {

/// "p/q", an integer, or a finite decimal (optionally with an exponent), read
/// exactly: "0.76" is 19/25. Throws ParseError otherwise, including for "1/0".
Rational parse_exact(std::string_view text);

/// Command-line entry point. Returns the process exit status:
/// 0 success, 1 usage, 2 domain, 3 convergence, 4 I/O, 5 failed claims.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mubound
