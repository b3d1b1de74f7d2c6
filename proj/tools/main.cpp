#include "cli.hpp"

int main(int argc, char** argv) { return moncp::cli::run({argv, argv + argc}); }
