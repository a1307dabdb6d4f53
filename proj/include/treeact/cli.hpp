#pragma once

#include <iosfwd>

namespace treeact::cli {

/// Full command-line driver, factored out of main() so tests can invoke it
/// in-process. Returns the process exit code: 0 success, 1 verification
/// failure, 2 usage error, 3 resource or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace treeact::cli
