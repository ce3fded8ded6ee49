#include <iostream>

#include "cdgacalc/cli/cli.hpp"

int main(int argc, char** argv)
{
    return cdgacalc::cli::run(argc, argv, std::cout, std::cerr);
}
