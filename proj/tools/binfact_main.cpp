#include "binfact/cli.hpp"

int main(int argc, char** argv) { return binfact::cli::run(argc, argv); }
