#include <iostream>
#include <string>
#include <vector>

#include "rpart/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return rpart::cli::dispatch(args, std::cout, std::cerr);
}
