#include "cli_app.hpp"

int main(int argc, char** argv) { return szpiro::cli::run(argc, argv, std::cout, std::cerr); }
