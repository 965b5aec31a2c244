#include <iostream>
#include <string>
#include <vector>

#include <cicy/cli.hpp>

int main(int argc, char* argv[])
{
    std::vector<std::string> args;
    if (argc > 1) {
        args.assign(argv + 1, argv + argc);
    }
    return cicy::cli::run_cli(args, std::cout, std::cerr);
}
