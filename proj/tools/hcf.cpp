#include "hcf/cli.hpp"

int main(int argc, char** argv) { return hcf::run(argc, argv); }
