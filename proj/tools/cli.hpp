#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qproof::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success or a verified proof, 1 on a rejected proof, 2 on
/// usage, I/O or parse errors. Verdict lines go to `out`, prose to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qproof::cli
