#include <iostream>
#include <string>
#include <vector>

#include <harmonium/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return harmonium::cli::dispatch(std::move(args), std::cout, std::cerr);
}
