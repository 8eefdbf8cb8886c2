#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfc::cli {

enum ExitCode { Ok = 0, VerdictFalse = 1, UsageError = 2, InternalError = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfc::cli
