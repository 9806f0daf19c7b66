#include "pxpy/cli.hpp"

int main(int argc, char** argv) { return pxpy::cli::run(argc, argv); }
