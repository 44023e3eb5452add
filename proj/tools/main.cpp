#include "deltaop/cli.hpp"

int main(int argc, char** argv) { return deltaop::cli::run(argc, argv); }
