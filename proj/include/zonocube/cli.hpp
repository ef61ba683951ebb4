#pragma once

#include <iosfwd>

namespace zonocube::cli {

enum ExitCode : int { kOk = 0, kDiagnostic = 1, kMalformed = 2 };

/// Runs one command line; reads stdin when no input file is named.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zonocube::cli
