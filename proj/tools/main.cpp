#include "rawbench/cli.hpp"

int main(int argc, char** argv) { return rawbench::io::cli_main(argc, argv); }
