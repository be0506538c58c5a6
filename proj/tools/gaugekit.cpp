#include <iostream>

#include "gaugekit/cli.hpp"

int main(int argc, char** argv) { return gaugekit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout); }
