#include "kgg/cli.hpp"

int main(int argc, char** argv) { return kgg::cli::main(argc, argv); }
