#include <iostream>

#include "zetamod/cli.hpp"

int main(int argc, char** argv)
{
    return zetamod::cli::run(argc, argv, std::cout, std::cerr);
}
