#include "hjc/cli.hpp"

int main(int argc, char** argv) { return hjc::cli::main_entry(argc, argv); }
