#include "qhgr/cli.hpp"

int main(int argc, char** argv) { return qhgr::main_entry(argc, argv); }
