#include "expdom/cli.hpp"

int main(int argc, char** argv) { return expdom::cli_main(argc, argv); }
