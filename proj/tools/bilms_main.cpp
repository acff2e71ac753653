#include "bilms/cli.hpp"

int main(int argc, char** argv) { return bilms::cli_main(argc, argv); }
