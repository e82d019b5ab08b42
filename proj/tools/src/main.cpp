#include <iostream>

#include "linelim/app/cli.hpp"

int main(int argc, char** argv) {
  return linelim::app::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
