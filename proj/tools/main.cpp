#include "staircase/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return staircase::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
