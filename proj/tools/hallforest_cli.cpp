#include "hallforest/cli.hpp"

int main(int argc, char** argv) { return hallforest::cli::run_main(argc, argv); }
