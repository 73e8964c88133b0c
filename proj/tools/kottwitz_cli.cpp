#include <iostream>

#include "kottwitz/cli.hpp"

int main(int argc, char** argv) { return kottwitz::cli::run_cli(argc, argv, std::cout, std::cerr); }
