#include "semiwig/cli.hpp"

int main(int argc, char** argv) { return semiwig::run_cli(argc, argv); }
