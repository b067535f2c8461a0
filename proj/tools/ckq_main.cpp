#include "ckq/cli.hpp"

int main(int argc, char** argv) { return ckq::cli::main(argc, argv); }
