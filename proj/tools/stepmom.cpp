#include <iostream>
#include <string>
#include <vector>

#include "stepmom/cli.hpp"

int main(int argc, char** argv) {
    return stepmom::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
