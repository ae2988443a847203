#include <string>
#include <vector>

#include "wsg_cli/run.hpp"

int main(int argc, char** argv) {
  return wsg::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc));
}
