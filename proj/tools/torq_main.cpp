#include <cstdio>

#include "torq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    torq::cli_result res = torq::run_cli(args);
    if (!res.out.empty())
        std::fputs(res.out.c_str(), stdout);
    if (!res.err.empty())
        std::fputs(res.err.c_str(), stderr);
    return res.code;
}
