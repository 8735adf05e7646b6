#include "cli/commands.hpp"

int main(int argc, char** argv) { return k3cliff::cli::run_cli(argc, argv); }
