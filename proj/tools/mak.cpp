#include "mak/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mak::cli::run(argc, argv, std::cout, std::cerr);
}
