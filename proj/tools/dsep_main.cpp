#include "dsep/cli.hpp"

int main(int argc, char** argv) { return dsep::run_cli(argc, argv); }
