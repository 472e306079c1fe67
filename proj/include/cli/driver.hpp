#ifndef CLI_DRIVER_HPP
#define CLI_DRIVER_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

/// Exit codes: 0 all checks pass, 1 at least one failure, 2 disputed claims
/// only, 3 usage error.
struct RunResult {
    int exit_code = 0;
    std::string out;
    nlohmann::ordered_json json;
};

/// Runs one subcommand; args exclude the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace cli

#endif
