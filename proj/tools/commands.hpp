#pragma once

#include <iosfwd>

namespace preproj::cli {

/// Runs the command line; returns the process exit code
/// (0 success, 1 computation-domain error, 2 invalid input).
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace preproj::cli
