#include <iostream>
#include <string>
#include <vector>

#include "turan/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return turan::run(args, std::cout, std::cerr);
}
