#include "cli.hpp"

int main(int argc, char** argv) { return nrgen::cli::main_entry(argc, argv); }
