#include "globus/cli.hpp"

int main(int argc, char** argv) { return globus::cli::cli_main(argc, argv); }
