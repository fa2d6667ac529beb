#pragma once

#include <iosfwd>

namespace tropsa::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kCapExceeded = 2, kInternal = 3 };

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tropsa::cli
