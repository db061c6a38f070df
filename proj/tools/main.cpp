#include "chemwave/cli.hpp"

int main(int argc, char** argv) { return chemwave::cli::run_cli(argc, argv); }
