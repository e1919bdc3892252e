#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairauction {

enum ExitCode : int
{
  kExitOk       = 0,
  kExitInput    = 1,  // usage, parse, validation or empty-auction errors
  kExitInternal = 2,  // invariant violations, oracle mismatch
};

/// Entry point for the command-line tool. `args[0]` is the program name.
///
///   solve <file> [--format text|json] [--oracle]
///   gen --seed S --resources M --bidders N --max-amount A --out <file>
///   sweep <file> --axis auctioneer-scale|bidder-scale|bid-scale
///         --grid v1,v2,... --out <file> [--seed S]
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace fairauction
