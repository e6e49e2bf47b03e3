#include "oscidyn/run.hpp"

int main(int argc, char** argv) { return oscidyn::cli_main(argc, argv); }
