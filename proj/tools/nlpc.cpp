#include "nlpc/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return nlpc::run_cli(argc, argv, std::cout, std::cerr);
}
