#pragma once

#include <string>
#include <vector>

namespace hallforest::cli {

/// Runs the command line interface. Exit codes: 0 success, 1 verification
/// failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

int run_main(int argc, char** argv);

}  // namespace hallforest::cli
