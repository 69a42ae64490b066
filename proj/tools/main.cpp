#include <string>
#include <vector>

#include "interlace/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return interlace::run_command(args);
}
