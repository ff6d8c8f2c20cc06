#include "zmlab/cli.hpp"

int main(int argc, char** argv) { return zmlab::run_cli(argc, argv); }
