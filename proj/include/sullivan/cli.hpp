#pragma once

#include <string>
#include <vector>

namespace sullivan {

// Exit codes: 0 success, 1 a negative mathematical verdict, 2 misuse or bad input.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Arguments without the program name, e.g. {"cohomology", "corpus:b4", "--degrees", "0..4"}.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sullivan
