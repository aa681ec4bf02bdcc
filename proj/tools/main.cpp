#include "commands.hpp"

int main(int argc, char** argv) { return goswf::cli::main_entry(argc, argv); }
