#pragma once

#include <string>
#include <vector>

namespace zmlab {

// The command-line driver; returns the process exit status.
//   0  success (all requested verdicts pass)
//   1  a verdict failed
//   2  invalid parameters or usage
//   3  budget / truncation failure
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace zmlab
