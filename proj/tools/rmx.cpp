#include "commands.hpp"

int main(int argc, char** argv) { return rmx::cli::run(argc, argv); }
