#include <geolab/cli/runner.hpp>

int main(int argc, char** argv) { return geolab::cli::cli_main(argc, argv); }
