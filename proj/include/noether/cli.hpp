#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace noether {

/// Runs one command line. JSON goes to `out`, progress and diagnostics to
/// `err`. Exit codes: 0 ok, 1 domain error, 2 bad spec or flags, 3 resource
/// cap, 4 disagreement between the two primes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noether
