#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binfact::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerifyFailed = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace binfact::cli
