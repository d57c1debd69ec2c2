#include <iostream>
#include <string>
#include <vector>

#include "xreal/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return xreal::cli::main_with_args(args, std::cout, std::cerr, std::cin);
}
