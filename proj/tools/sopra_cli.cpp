#include <sopra/cli.hpp>

int main(int argc, char** argv) { return sopra::cli_main(argc, argv); }
