#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypvol::cli {

// Routes to the subcommands. Exit status 0 on success, 1 on domain errors,
// 2 on malformed input or usage errors. `in` feeds subcommands that read
// standard input when no --input path is given.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in);

}  // namespace hypvol::cli
