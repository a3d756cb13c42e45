#include <iostream>
#include <string>
#include <vector>

#include "archslice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  archslice::cli::RealFileSystem fs;
  return archslice::cli::main(args, fs, std::cout, std::cerr);
}
