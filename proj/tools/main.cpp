#include <iostream>

#include "hardy/cli_app.hpp"

int main(int argc, char** argv) {
    return hardy::cli::main_entry(argc, argv, std::cout, std::cerr);
}
