#include "parity/cli.hpp"

int main(int argc, char** argv) { return parity::run_cli(argc, argv); }
