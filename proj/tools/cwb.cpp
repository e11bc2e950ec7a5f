#include <iostream>

#include "cwb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cwb::cli::Outcome r = cwb::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
