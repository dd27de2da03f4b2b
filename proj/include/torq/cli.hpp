#pragma once

#include <string>
#include <vector>

namespace torq {

/* exit codes: 0 all checks pass, 1 a check failed, 2 input error,
 * 3 a truncated computation did not stabilize */
enum cli_exit : int {
    cli_ok = 0,
    cli_check_failed = 1,
    cli_input_error = 2,
    cli_not_stabilized = 3,
};

struct cli_result {
    int code = 0;
    std::string out;
    std::string err;
};

/* Runs the command line (without argv[0]); all output is collected so runs
 * are reproducible byte for byte. */
cli_result run_cli(const std::vector<std::string>& args);

}  // namespace torq
