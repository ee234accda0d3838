#pragma once

#include <iosfwd>

namespace dgalab {

// Batch front end. Parses argv, runs one verb, writes the report to `out`
// and diagnostics to `err`. Returns the process exit code: 0 on success,
// 1 on an invariant or verification failure, 2 on an input/usage error.
// Identical invocations produce byte-identical output on `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dgalab
