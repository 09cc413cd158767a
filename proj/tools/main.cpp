#include "cli.hpp"

int main(int argc, char** argv) { return topontk::cli::main(argc, argv); }
