#include <iostream>

#include "qmono/cli.hpp"

int main(int argc, char** argv) {
  return qmono::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
