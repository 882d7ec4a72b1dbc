#include "stdcx/cli.hpp"

int main(int argc, char** argv) { return stdcx::cli::run(argc, argv); }
