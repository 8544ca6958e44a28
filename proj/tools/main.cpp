#include "kgon/cli.hpp"

int main(int argc, char** argv) { return kgon::cli::run(argc, argv); }
