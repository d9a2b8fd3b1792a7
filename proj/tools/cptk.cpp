#include <iostream>

#include "cpt/cli.hpp"

int main(int argc, char** argv)
{
    return cpt::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
