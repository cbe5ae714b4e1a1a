#include "clark/cli.hpp"

int main(int argc, char** argv) { return clark::cli::main(argc, argv); }
