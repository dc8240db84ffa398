#ifndef SHIFTKIT_TOOLS_CLI_HPP
#define SHIFTKIT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "shiftkit/error.hpp"

namespace shiftkit::cli {

/// 0 ok, 1 usage, 2 parse, 3 genericity, 4 verification.
int exit_code(ErrorKind kind);

/// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftkit::cli

#endif
