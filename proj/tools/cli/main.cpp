#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return frobscan::cli::run(argc, argv, std::cout, std::cerr);
}
