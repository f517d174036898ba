#include <iostream>

#include "sgcert/cli.hpp"

int main(int argc, char** argv) { return sgcert::cli::run(argc, argv, std::cout, std::cerr); }
