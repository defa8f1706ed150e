#include <iostream>

#include "run_config.hpp"

int main(int argc, char** argv) {
    return sgdqe::cli::main_entry(argc, argv, std::cout, std::cerr);
}
