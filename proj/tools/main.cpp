#include "pkpm/cli.hpp"

int main(int argc, char** argv) { return pkpm::cli_main(argc, argv); }
