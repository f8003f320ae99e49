#include <iostream>
#include <string>
#include <vector>

#include "wimax_il/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return wimax_il::cli::run(args, std::cout, std::cerr).exit_code;
}
