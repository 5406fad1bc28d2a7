#pragma once

#include <iosfwd>

namespace plab::cli {

/// Runs one permutoid-lab invocation. Reports go to `out` (or the -o file),
/// diagnostics to `err`. Returns 0 success, 1 negative, 2 inconclusive,
/// 3 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plab::cli
