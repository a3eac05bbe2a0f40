#include <iostream>
#include <string>
#include <vector>

#include "primeweb/cli/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return primeweb::cli::run(args, std::cout, std::cerr);
}
