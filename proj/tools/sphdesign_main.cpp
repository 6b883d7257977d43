#include "sphdesign/cli.hpp"

int main(int argc, char** argv) { return sphd::run_cli(argc, argv); }
