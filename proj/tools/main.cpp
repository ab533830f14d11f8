#include <iostream>

#include "bredon/cli.hpp"

int main(int argc, char** argv)
{
    return bredon::cli::run(argc, argv, std::cout, std::cerr);
}
