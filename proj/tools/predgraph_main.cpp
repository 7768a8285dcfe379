#include "predgraph/harness.hpp"

int main(int argc, char** argv) { return predgraph::cli_main(argc, argv); }
