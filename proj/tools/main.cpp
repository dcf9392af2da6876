#include "staircase/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return staircase::cli::run_and_print(args, std::cout);
}
