// Command-line front end. Exit codes: 0 success, 1 verification failures
// (the report is still printed), 2 usage errors, 3 window exceeded.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arcoalg::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kWindow = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcoalg::cli
