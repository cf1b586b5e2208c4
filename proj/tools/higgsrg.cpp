#include <string>
#include <vector>

#include "higgsrg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return higgsrg::run_cli(std::move(args));
}
