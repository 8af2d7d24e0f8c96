#include "vacshift/cli.hpp"

int main(int argc, char** argv) { return vacshift::run_cli(argc, argv); }
