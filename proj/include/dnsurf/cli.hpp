#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnsurf {

// Runs the command-line tool. `args` excludes the program name. Returns the
// process exit code: 0 success / checks passed, 1 a verification failed,
// 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dnsurf
