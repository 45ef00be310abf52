#include "sullivan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const sullivan::CommandResult r = sullivan::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
