#include <cstdio>
#include <string>
#include <vector>

#include "cli/driver.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cli::RunResult r = cli::run(args);
    std::fputs(r.out.c_str(), stdout);
    return r.exit_code;
}
