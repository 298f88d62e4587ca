#include "mindist/cli.hpp"

int main(int argc, char** argv) { return md::run_cli(argc, argv); }
