#include "vip/cli.hpp"

int main(int argc, char** argv) { return vip::cli::main(argc, argv); }
