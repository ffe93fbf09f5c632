#include "qchl/cli.hpp"

int main(int argc, char** argv) { return qchl::run_cli(argc, argv); }
