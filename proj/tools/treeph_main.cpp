#include "treeph/cli_app.hpp"

int main(int argc, char** argv) { return treeph::run_cli(argc, argv); }
