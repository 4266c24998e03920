#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomlab {

// Runs one command line (without the program name). Reports go to out,
// notices and errors to err. Exit status: 0 success, 1 input error,
// 2 capacity exceeded, 3 internal inconsistency.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace atomlab
