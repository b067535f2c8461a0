#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ckq {
namespace cli {

/// Runs one CLI invocation (argv without the program name).  All output goes
/// to `out`; the return value is the process exit code.  Parse errors return
/// 2, verification mismatches 1.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace cli
}  // namespace ckq
