#include <iostream>

#include "hopfmzv/cli.hpp"

int main(int argc, char** argv)
{
    return hopfmzv::run_cli(argc, argv, std::cout, std::cerr);
}
