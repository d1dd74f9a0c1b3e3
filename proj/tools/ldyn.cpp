#include "ldyn/cli.hpp"

int main(int argc, char** argv) { return ldyn::cli::run(argc, argv); }
