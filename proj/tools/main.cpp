#include "commands.hpp"

int main(int argc, char** argv) { return gamefit::cli::run(argc, argv); }
