#include "fibgen/cli.hpp"

int main(int argc, char** argv) { return fibgen::cli::run(argc, argv); }
