#include "deltafilt/cli.hpp"

int main(int argc, char** argv) { return deltafilt::cli::run(argc, argv); }
