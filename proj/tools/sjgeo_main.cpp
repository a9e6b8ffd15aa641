#include "sjgeo/cli.hpp"

int main(int argc, char** argv) { return sjgeo::run_cli(argc, argv); }
