#include <iostream>
#include <string>
#include <vector>

#include "nilreal/atlas.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilreal::atlas::run(args, std::cout, std::cerr);
}
