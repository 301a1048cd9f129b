#include <iostream>
#include <string>
#include <vector>

#include "hsq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hsq::CliResult result = hsq::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
